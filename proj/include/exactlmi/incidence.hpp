#pragma once

// Incidence systems A(x) Y(y) = 0 for a target rank r, where the rows of Y
// listed in a row subset are fixed to the identity, plus random linear
// changes of the x coordinates.

#include <stdexcept>
#include <string>
#include <vector>

#include "pencil.hpp"
#include "random.hpp"

namespace exactlmi {

struct RowSubset {
  std::vector<std::size_t> indices;  // 1-based, strictly increasing

  bool operator==(const RowSubset& o) const { return indices == o.indices; }
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k]);
    return s + "}";
  }
};

/// All (m-r)-subsets of {1..m} in lexicographic order.
inline std::vector<RowSubset> enumerate_normalizations(std::size_t m, std::size_t r) {
  if (m == 0 || r >= m) throw std::out_of_range("rank must lie in [0, m-1]");
  const std::size_t k = m - r;
  std::vector<RowSubset> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back({cur});
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

struct IncidenceSystem {
  std::size_t rank = 0;
  RowSubset subset;
  std::size_t nx = 0;  // x-block: variables 0..nx-1
  std::size_t ny = 0;  // y-block: variables nx..nx+ny-1
  std::vector<std::string> names;
  std::vector<MultiPolyQ> equations;

  std::size_t nvars() const { return nx + ny; }
  MonomialOrder order() const { return MonomialOrder::degrevlex(nvars()); }
};

inline IncidenceSystem build_incidence_system(const LinearPencil& P, std::size_t r, const RowSubset& s) {
  const std::size_t m = P.m(), n = P.n();
  if (r >= m) throw std::out_of_range("rank must lie in [0, m-1]");
  const std::size_t k = m - r;
  if (s.indices.size() != k) throw std::invalid_argument("row subset has the wrong size");
  for (std::size_t i = 0; i < k; ++i) {
    if (s.indices[i] < 1 || s.indices[i] > m) throw std::invalid_argument("row subset index out of range");
    if (i > 0 && s.indices[i] <= s.indices[i - 1]) throw std::invalid_argument("row subset must be increasing");
  }
  IncidenceSystem S;
  S.rank = r;
  S.subset = s;
  S.nx = n;
  S.ny = r * k;
  if (S.nvars() > kMaxVars) throw std::invalid_argument("incidence system has too many variables");
  S.names = P.names();
  const MonomialOrder order = S.order();

  // Y(i, j): identity on the subset rows, fresh variables elsewhere (row-major).
  std::vector<std::vector<MultiPolyQ>> Y(m, std::vector<MultiPolyQ>(k, MultiPolyQ(order)));
  std::size_t next = n, fixed = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (fixed < k && s.indices[fixed] == i + 1) {
      Y[i][fixed] = MultiPolyQ::constant(order, 1);
      ++fixed;
      continue;
    }
    for (std::size_t j = 0; j < k; ++j) {
      S.names.push_back("y" + std::to_string(next - n + 1));
      Y[i][j] = MultiPolyQ::variable(order, next++);
    }
  }
  const PolyMatrix A = P.as_poly_matrix(order);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      MultiPolyQ e(order);
      for (std::size_t l = 0; l < m; ++l)
        if (!A(i, l).is_zero() && !Y[l][j].is_zero()) e += A(i, l) * Y[l][j];
      S.equations.push_back(std::move(e));
    }
  return S;
}

struct CoordinateChange {
  RationalMatrix M;     // x' = M x
  RationalMatrix Minv;  // x = Minv x'
};

/// Random invertible integer matrix with entries uniform in [-99, 99].
inline CoordinateChange random_coordinate_change(std::uint64_t seed, std::size_t n) {
  if (n == 0) throw std::invalid_argument("coordinate change needs n >= 1");
  Rng rng(seed);
  for (;;) {
    RationalMatrix M(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = Rational(static_cast<long>(rng.uniform(-99, 99)));
    auto inv = inverse(M);
    if (inv) return {std::move(M), std::move(*inv)};
  }
}

/// Rewrites the system in the new coordinates x' = M x (y-block untouched).
inline std::vector<MultiPolyQ> apply_coordinate_change(const std::vector<MultiPolyQ>& F, std::size_t nx,
                                                       const CoordinateChange& cc) {
  if (F.empty()) return {};
  const MonomialOrder order = F.front().order();
  std::vector<MultiPolyQ> images;
  for (std::size_t i = 0; i < order.nvars; ++i) {
    if (i >= nx) {
      images.push_back(MultiPolyQ::variable(order, i));
      continue;
    }
    std::vector<MultiPolyQ::Term> terms;
    for (std::size_t j = 0; j < nx; ++j)
      if (cc.Minv(i, j) != 0) terms.push_back({Monomial::variable(j), cc.Minv(i, j)});
    images.push_back(MultiPolyQ::from_terms(order, std::move(terms)));
  }
  std::vector<MultiPolyQ> out;
  for (const auto& f : F) out.push_back(f.substitute(images, order));
  return out;
}

/// x = Minv x'.
inline RationalVector pull_back_point(const RationalMatrix& Minv, const RationalVector& xp) { return Minv * xp; }

}  // namespace exactlmi
