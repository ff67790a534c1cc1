#pragma once

// Symmetric linear pencils A(x) = A0 + x1 A1 + ... + xn An over Q.

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"

namespace exactlmi {

struct PencilParseError : ParseError {
  PencilParseError(std::size_t line, std::size_t column, const std::string& what)
      : ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line, column;
};

struct AsymmetryError : std::invalid_argument {
  AsymmetryError(std::size_t matrix, std::size_t i, std::size_t j)
      : std::invalid_argument("matrix A" + std::to_string(matrix) + " is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")"),
        matrix(matrix),
        i(i),
        j(j) {}
  std::size_t matrix, i, j;  // 1-based (i, j)
};

/// Coefficients p_1..p_m of det(s I + A(x)) = s^m + p_1 s^(m-1) + ... + p_m.
struct CharPolyCoeffs {
  std::vector<MultiPolyQ> p;  // p[k-1] = p_k
  const MultiPolyQ& operator()(std::size_t k) const { return p.at(k - 1); }
  std::size_t size() const { return p.size(); }
};

/// p_k by Faddeev-LeVerrier over Q[x]; entries must share one ring.
inline CharPolyCoeffs faddeev_leverrier(const PolyMatrix& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t m = a.rows();
  const MonomialOrder order = a(0, 0).order();
  const MultiPolyQ zero(order), one = MultiPolyQ::constant(order, 1);
  auto mul = [&](const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r(m, m, zero);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  };
  // det(lambda I - A) = lambda^m + c_1 lambda^(m-1) + ... + c_m, and p_k = (-1)^k c_k.
  CharPolyCoeffs out;
  PolyMatrix mk = PolyMatrix::identity(m, zero, one);
  for (std::size_t k = 1; k <= m; ++k) {
    PolyMatrix amk = mul(a, mk);
    MultiPolyQ tr(order);
    for (std::size_t i = 0; i < m; ++i) tr += amk(i, i);
    MultiPolyQ ck = tr.scaled(Rational(-1, static_cast<long>(k)));
    out.p.push_back(k % 2 ? -ck : ck);
    if (k < m) {
      for (std::size_t i = 0; i < m; ++i) amk(i, i) += ck;
      mk = std::move(amk);
    }
  }
  return out;
}

class LinearPencil {
 public:
  LinearPencil(std::vector<RationalMatrix> matrices, std::vector<std::string> names)
      : matrices_(std::move(matrices)), names_(std::move(names)), cache_(std::make_shared<Cache>()) {
    if (matrices_.size() < 2) throw std::invalid_argument("pencil needs A0 and at least one variable");
    if (names_.size() != matrices_.size() - 1) throw std::invalid_argument("variable name count mismatch");
    const std::size_t m = matrices_[0].rows();
    if (m == 0) throw std::invalid_argument("pencil size must be positive");
    for (std::size_t k = 0; k < matrices_.size(); ++k) {
      const auto& a = matrices_[k];
      if (a.rows() != m || a.cols() != m) throw std::invalid_argument("pencil matrices differ in size");
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (a(i, j) != a(j, i)) throw AsymmetryError(k, i + 1, j + 1);
    }
  }

  /// Default variable names x1..xn.
  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
  }

  std::size_t n() const { return matrices_.size() - 1; }
  std::size_t m() const { return matrices_[0].rows(); }
  const std::vector<RationalMatrix>& matrices() const { return matrices_; }
  const std::vector<std::string>& names() const { return names_; }
  MonomialOrder ring() const { return MonomialOrder::degrevlex(n()); }

  /// Entry (i, j) (0-based) as an affine polynomial in a ring whose first n
  /// variables are x1..xn.
  MultiPolyQ entry(std::size_t i, std::size_t j, MonomialOrder order) const {
    std::vector<MultiPolyQ::Term> terms;
    if (matrices_[0](i, j) != 0) terms.push_back({Monomial(), matrices_[0](i, j)});
    for (std::size_t k = 1; k < matrices_.size(); ++k)
      if (matrices_[k](i, j) != 0) terms.push_back({Monomial::variable(k - 1), matrices_[k](i, j)});
    return MultiPolyQ::from_terms(order, std::move(terms));
  }

  PolyMatrix as_poly_matrix(MonomialOrder order) const {
    PolyMatrix a(m(), m(), MultiPolyQ(order));
    for (std::size_t i = 0; i < m(); ++i)
      for (std::size_t j = 0; j < m(); ++j) a(i, j) = entry(i, j, order);
    return a;
  }
  PolyMatrix as_poly_matrix() const { return as_poly_matrix(ring()); }

  RationalMatrix evaluate(const RationalVector& x) const {
    if (x.size() != n()) throw std::invalid_argument("evaluation point has wrong arity");
    RationalMatrix r = matrices_[0];
    for (std::size_t k = 1; k < matrices_.size(); ++k) {
      if (x[k - 1] == 0) continue;
      for (std::size_t i = 0; i < m(); ++i)
        for (std::size_t j = 0; j < m(); ++j) r(i, j) += x[k - 1] * matrices_[k](i, j);
    }
    return r;
  }

  /// Computed on first use and shared by copies of this pencil.
  const CharPolyCoeffs& char_poly_coeffs() const {
    std::call_once(cache_->once, [this] { cache_->coeffs = faddeev_leverrier(as_poly_matrix()); });
    return cache_->coeffs;
  }

  std::size_t exact_rank_at_rational(const RationalVector& x) const { return rank(evaluate(x)); }

  /// A rational x with A(x) = 0 when the linear system is consistent.
  std::optional<RationalVector> solve_linear_zero() const {
    const std::size_t rows = m() * (m() + 1) / 2;
    RationalMatrix lhs(rows, n(), Rational(0));
    RationalVector rhs(rows);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m(); ++i)
      for (std::size_t j = i; j < m(); ++j, ++r) {
        for (std::size_t k = 1; k <= n(); ++k) lhs(r, k - 1) = matrices_[k](i, j);
        rhs[r] = -matrices_[0](i, j);
      }
    return solve_linear(lhs, rhs);
  }

  /// Same pencil scaled by a rational factor.
  LinearPencil scaled(const Rational& c) const {
    auto mats = matrices_;
    for (auto& a : mats)
      for (std::size_t i = 0; i < m(); ++i)
        for (std::size_t j = 0; j < m(); ++j) a(i, j) *= c;
    return LinearPencil(std::move(mats), names_);
  }

  /// Symmetric permutation P A(x) P^T (perm[i] = source row of row i).
  LinearPencil permuted(const std::vector<std::size_t>& perm) const {
    auto mats = matrices_;
    for (std::size_t k = 0; k < mats.size(); ++k)
      for (std::size_t i = 0; i < m(); ++i)
        for (std::size_t j = 0; j < m(); ++j) mats[k](i, j) = matrices_[k](perm[i], perm[j]);
    return LinearPencil(std::move(mats), names_);
  }

 private:
  struct Cache {
    std::once_flag once;
    CharPolyCoeffs coeffs;
  };
  std::vector<RationalMatrix> matrices_;
  std::vector<std::string> names_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

inline std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Builds A0..An from a table of affine entries, checking symmetry pairwise.
struct EntryTable {
  std::size_t m, n;
  std::vector<std::vector<std::optional<MultiPolyQ>>> cells;
  EntryTable(std::size_t m, std::size_t n) : m(m), n(n), cells(m, std::vector<std::optional<MultiPolyQ>>(m)) {}

  LinearPencil finish(const std::vector<std::string>& names) const {
    const MonomialOrder order = MonomialOrder::degrevlex(n);
    std::vector<RationalMatrix> mats(n + 1, RationalMatrix(m, m, Rational(0)));
    auto coeff = [&](const MultiPolyQ& p, std::size_t k) {
      return k == 0 ? p.constant_term() : p.coefficient(Monomial::variable(k - 1));
    };
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        const auto& up = cells[i][j];
        const auto& lo = cells[j][i];
        MultiPolyQ value = up ? *up : lo ? *lo : MultiPolyQ(order);
        if (i != j && lo) {
          // A lower-triangle line is only accepted as a copy of the upper one.
          MultiPolyQ upper = up ? *up : MultiPolyQ(order);
          for (std::size_t k = 0; k <= n; ++k)
            if (coeff(upper, k) != coeff(*lo, k)) throw AsymmetryError(k, i + 1, j + 1);
        }
        for (std::size_t k = 0; k <= n; ++k) {
          mats[k](i, j) = coeff(value, k);
          mats[k](j, i) = mats[k](i, j);
        }
      }
    return LinearPencil(std::move(mats), names);
  }
};

inline MultiPolyQ parse_affine(const std::string& expr, const std::vector<std::string>& names,
                               std::size_t line, std::size_t col0) {
  MultiPolyQ p;
  try {
    PolyParser parser(expr, names, MonomialOrder::degrevlex(names.size()));
    p = parser.parse();
  } catch (const ParseError& e) {
    // Recover the column reported by the expression parser.
    std::string msg = e.what();
    std::size_t col = col0;
    if (auto at = msg.find("at column "); at != std::string::npos) col += std::stoul(msg.substr(at + 10)) - 1;
    throw PencilParseError(line, col, msg);
  }
  if (p.total_degree() > 1) throw PencilParseError(line, col0, "entry is not affine: " + expr);
  return p;
}

}  // namespace detail

/// Text format:
///   lmi m=<int> n=<int> vars=x1,...,xn
///   entry i j : <affine expression>
/// Blank lines and '#' comments are ignored; omitted entries are zero.
inline LinearPencil parse_pencil(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<detail::EntryTable> table;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::istringstream ls(line.substr(first));
    std::string keyword;
    ls >> keyword;
    if (keyword == "lmi") {
      if (table) throw PencilParseError(lineno, first + 1, "duplicate header");
      long m = -1, n = -1;
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw PencilParseError(lineno, first + 1, "malformed header field '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
          if (key == "m") m = std::stol(val);
          else if (key == "n") n = std::stol(val);
          else if (key == "vars") names = detail::split_names(val);
          else throw PencilParseError(lineno, first + 1, "unknown header field '" + key + "'");
        } catch (const std::logic_error&) {
          throw PencilParseError(lineno, first + 1, "malformed header value '" + tok + "'");
        }
      }
      if (m < 1 || n < 1) throw PencilParseError(lineno, first + 1, "header needs m>=1 and n>=1");
      if (names.empty()) names = LinearPencil::default_names(static_cast<std::size_t>(n));
      if (names.size() != static_cast<std::size_t>(n))
        throw PencilParseError(lineno, first + 1, "vars lists " + std::to_string(names.size()) + " names, n=" + std::to_string(n));
      table.emplace(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    } else if (keyword == "entry") {
      if (!table) throw PencilParseError(lineno, first + 1, "entry before header");
      long i = 0, j = 0;
      if (!(ls >> i >> j)) throw PencilParseError(lineno, first + 1, "expected 'entry i j : expr'");
      std::string colon;
      ls >> colon;
      if (colon != ":") throw PencilParseError(lineno, first + 1, "expected ':' after indices");
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > table->m || static_cast<std::size_t>(j) > table->m)
        throw PencilParseError(lineno, first + 1, "entry index out of range");
      std::size_t expr_start = line.find(':') + 1;
      std::string expr = line.substr(expr_start);
      auto& cell = table->cells[i - 1][j - 1];
      if (cell) throw PencilParseError(lineno, first + 1, "duplicate entry " + std::to_string(i) + " " + std::to_string(j));
      cell = detail::parse_affine(expr, names, lineno, expr_start + 1);
    } else {
      throw PencilParseError(lineno, first + 1, "unknown keyword '" + keyword + "'");
    }
  }
  if (!table) throw PencilParseError(lineno ? lineno : 1, 1, "missing 'lmi' header");
  return table->finish(names);
}

/// JSON form: {"m":..,"n":..,"vars":[..], "entries":[{"i":1,"j":1,"expr":"1+x1"},..]}
/// or with "matrices": [A0, ..., An] as nested arrays of rational strings/integers.
inline LinearPencil parse_pencil_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::size_t n = j.at("n").get<std::size_t>();
    if (m < 1 || n < 1) throw ParseError("pencil needs m>=1 and n>=1");
    std::vector<std::string> names =
        j.contains("vars") ? j["vars"].get<std::vector<std::string>>() : LinearPencil::default_names(n);
    if (names.size() != n) throw ParseError("vars length differs from n");
    if (j.contains("matrices")) {
      const auto& arr = j["matrices"];
      if (arr.size() != n + 1) throw ParseError("expected n+1 matrices");
      std::vector<RationalMatrix> mats;
      for (const auto& mj : arr) {
        if (mj.size() != m) throw ParseError("matrix has wrong row count");
        RationalMatrix a(m, m);
        for (std::size_t r = 0; r < m; ++r) {
          if (mj[r].size() != m) throw ParseError("matrix has wrong column count");
          for (std::size_t c = 0; c < m; ++c) {
            const auto& v = mj[r][c];
            a(r, c) = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(Integer(v.dump()));
          }
        }
        mats.push_back(std::move(a));
      }
      return LinearPencil(std::move(mats), names);
    }
    detail::EntryTable table(m, n);
    std::size_t idx = 0;
    for (const auto& e : j.at("entries")) {
      ++idx;
      const long i = e.at("i").get<long>(), jj = e.at("j").get<long>();
      if (i < 1 || jj < 1 || static_cast<std::size_t>(i) > m || static_cast<std::size_t>(jj) > m)
        throw ParseError("entry index out of range in entries[" + std::to_string(idx - 1) + "]");
      auto& cell = table.cells[i - 1][jj - 1];
      if (cell) throw ParseError("duplicate entry " + std::to_string(i) + " " + std::to_string(jj));
      cell = detail::parse_affine(e.at("expr").get<std::string>(), names, idx, 1);
    }
    return table.finish(names);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed pencil JSON: ") + e.what());
  }
}

inline LinearPencil load_pencil(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".json") return parse_pencil_json(buf.str());
  return parse_pencil(buf.str());
}

/// Writes the text format; parse_pencil(write_pencil(P)) reproduces P.
inline std::string write_pencil(const LinearPencil& p) {
  std::ostringstream out;
  out << "lmi m=" << p.m() << " n=" << p.n() << " vars=";
  for (std::size_t i = 0; i < p.n(); ++i) out << (i ? "," : "") << p.names()[i];
  out << "\n";
  for (std::size_t i = 0; i < p.m(); ++i)
    for (std::size_t j = i; j < p.m(); ++j) {
      MultiPolyQ e = p.entry(i, j, p.ring());
      if (e.is_zero()) continue;
      out << "entry " << i + 1 << " " << j + 1 << " : " << e.to_string(p.names()) << "\n";
    }
  return out.str();
}

}  // namespace exactlmi
