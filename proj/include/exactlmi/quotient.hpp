#pragma once

// Linear algebra in Q[v]/I for a zero-dimensional ideal I given by a reduced
// Groebner basis: normal forms as coordinate vectors, multiplication maps,
// minimal polynomials and the walk over the x-subalgebra.

#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "groebner.hpp"
#include "matrix.hpp"
#include "unipoly.hpp"

namespace exactlmi {

/// Sparse-friendly dense vector helpers.
namespace detail {

inline bool is_zero_vector(const RationalVector& v) {
  for (const auto& a : v)
    if (a != 0) return false;
  return true;
}

inline void axpy(RationalVector& y, const Rational& a, const RationalVector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

}  // namespace detail

/// Incremental echelon basis that remembers how each stored row was built
/// from the inserted vectors, so a dependent vector yields its relation.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t dim) : dim_(dim) {}

  std::size_t size() const { return rows_.size(); }

  /// Reduces v against the span. Returns nullopt if v was independent (and
  /// stores it as inserted vector number size()-1); otherwise the coefficients
  /// c with v = sum c_k * inserted_k.
  std::optional<RationalVector> insert(const RationalVector& v) {
    auto [rest, combo] = reduce(v);
    if (detail::is_zero_vector(rest)) {
      for (auto& c : combo) c = -c;
      return combo;
    }
    // combo expresses rest = v + sum combo_k inserted_k; v is a new inserted vector.
    combo.push_back(Rational(1));
    std::size_t p = 0;
    while (rest[p] == 0) ++p;
    Rational inv = Rational(1) / rest[p];
    for (auto& a : rest) a *= inv;
    for (auto& c : combo) c *= inv;
    rows_.push_back({p, std::move(rest), std::move(combo)});
    return std::nullopt;
  }

  /// Coefficients of v in terms of inserted vectors, or nullopt if v is outside the span.
  std::optional<RationalVector> express(const RationalVector& v) const {
    auto [rest, combo] = reduce(v);
    if (!detail::is_zero_vector(rest)) return std::nullopt;
    for (auto& c : combo) c = -c;
    return combo;
  }

 private:
  struct Row {
    std::size_t pivot;
    RationalVector vec;    // pivot entry is 1
    RationalVector combo;  // vec = sum combo_k inserted_k
  };

  std::pair<RationalVector, RationalVector> reduce(const RationalVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector size mismatch");
    RationalVector rest = v;
    RationalVector combo(rows_.size(), Rational(0));
    for (const auto& r : rows_) {
      if (rest[r.pivot] == 0) continue;
      Rational f = rest[r.pivot];
      for (std::size_t i = 0; i < dim_; ++i)
        if (r.vec[i] != 0) rest[i] -= f * r.vec[i];
      for (std::size_t k = 0; k < r.combo.size(); ++k)
        if (r.combo[k] != 0) combo[k] -= f * r.combo[k];
    }
    return {std::move(rest), std::move(combo)};
  }

  std::size_t dim_;
  std::vector<Row> rows_;
};

class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(GroebnerBasis G, std::size_t max_dim = 5000) : G_(std::move(G)) {
    if (G_.is_unit()) throw std::invalid_argument("quotient by the unit ideal");
    if (!is_zero_dimensional(G_).zero_dimensional) throw std::invalid_argument("ideal is not zero-dimensional");
    basis_ = standard_monomials(G_, max_dim);
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
    const std::size_t n = G_.order.nvars;
    mult_.resize(n);
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t nvars() const { return G_.order.nvars; }
  const GroebnerBasis& groebner() const { return G_; }
  const std::vector<Monomial>& basis() const { return basis_; }

  RationalVector unit_vector() const { return coords(MultiPolyQ::constant(G_.order, 1)); }

  RationalVector coords(const MultiPolyQ& f) const {
    RationalVector v(dim(), Rational(0));
    const MultiPolyQ r = normal_form(f, G_);
    for (const auto& t : r.terms()) v[index_.at(t.mono)] += t.coeff;
    return v;
  }

  MultiPolyQ polynomial(const RationalVector& v) const {
    std::vector<MultiPolyQ::Term> terms;
    for (std::size_t k = 0; k < dim(); ++k)
      if (v[k] != 0) terms.push_back({basis_[k], v[k]});
    return MultiPolyQ::from_terms(G_.order, std::move(terms));
  }

  /// Matrix of multiplication by variable i (column k = coords of v_i * b_k).
  const RationalMatrix& mult_matrix(std::size_t i) const {
    auto& slot = mult_.at(i);
    if (slot.rows() == 0) {
      RationalMatrix M(dim(), dim(), Rational(0));
      for (std::size_t k = 0; k < dim(); ++k) {
        Monomial m = basis_[k] * Monomial::variable(i);
        RationalVector col;
        auto it = index_.find(m);
        if (it != index_.end()) {
          M(it->second, k) = 1;
          continue;
        }
        col = coords(MultiPolyQ::monomial(G_.order, m));
        for (std::size_t r = 0; r < dim(); ++r) M(r, k) = col[r];
      }
      slot = std::move(M);
    }
    return slot;
  }

  RationalVector mul_var(std::size_t i, const RationalVector& v) const { return mult_matrix(i) * v; }

  /// v multiplied by the linear form c0 + sum c_i v_i.
  RationalVector mul_linear(const RationalVector& c, const Rational& c0, const RationalVector& v) const {
    RationalVector out(dim(), Rational(0));
    detail::axpy(out, c0, v);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) detail::axpy(out, c[i], mul_var(i, v));
    return out;
  }

  /// Minimal polynomial (monic, over Q) of the element whose multiplication
  /// is given by `op`, computed from the Krylov sequence of 1. Krylov vectors
  /// are stored in `span` when provided.
  template <class Op>
  UniPolyQ min_poly(Op&& op, LinearSpan* span = nullptr) const {
    LinearSpan local(dim());
    LinearSpan& s = span ? *span : local;
    RationalVector v = unit_vector();
    for (std::size_t k = 0;; ++k) {
      auto rel = s.insert(v);
      if (rel) {
        std::vector<Rational> c(k + 1, Rational(0));
        for (std::size_t j = 0; j < rel->size(); ++j) c[j] = -(*rel)[j];
        c[k] = 1;
        return UniPolyQ(std::move(c));
      }
      v = op(v);
    }
  }

  UniPolyQ min_poly_of_var(std::size_t i) const {
    return min_poly([&](const RationalVector& v) { return mul_var(i, v); });
  }

 private:
  GroebnerBasis G_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  mutable std::vector<RationalMatrix> mult_;
};

/// Adds squarefree parts of the variables' minimal polynomials until the
/// ideal is radical. Returns the basis of the radical.
inline GroebnerBasis radical_zero_dim(const GroebnerBasis& G) {
  if (G.is_unit()) return G;
  QuotientAlgebra A(G);
  const std::size_t n = G.order.nvars;
  std::vector<MultiPolyQ> extra;
  for (std::size_t i = 0; i < n; ++i) {
    UniPolyQ mp = A.min_poly_of_var(i);
    UniPolyZ sq = squarefree_part(primitive_integer(mp));
    if (sq.degree() == mp.degree()) continue;
    MultiPolyQ f(G.order);
    MultiPolyQ xi = MultiPolyQ::variable(G.order, i);
    MultiPolyQ power = MultiPolyQ::constant(G.order, 1);
    for (const auto& c : sq.coeffs()) {
      if (c != 0) f += power * Rational(c);
      power *= xi;
    }
    extra.push_back(std::move(f));
  }
  if (extra.empty()) return G;
  std::vector<MultiPolyQ> F = G.generators;
  F.insert(F.end(), extra.begin(), extra.end());
  return groebner_basis(F, G.order);
}

/// Result of walking the monomials in the first `k` variables.
struct SubalgebraWalk {
  std::size_t dim = 0;                // dimension of the subalgebra Q[v_0..v_{k-1}] mod I
  std::vector<MultiPolyQ> relations;  // degrevlex basis of I intersected with Q[v_0..v_{k-1}]
};

/// Enumerates monomials in v_0..v_{k-1} by increasing degrevlex order and
/// records linear dependencies among their images; the independent ones
/// span the subalgebra.
inline SubalgebraWalk walk_subalgebra(const QuotientAlgebra& A, std::size_t k) {
  const MonomialOrder sub = MonomialOrder::degrevlex(k);
  auto cmp = [&](const Monomial& a, const Monomial& b) { return sub.compare(a, b) < 0; };
  std::set<Monomial, decltype(cmp)> todo(cmp);
  std::unordered_map<Monomial, RationalVector, MonomialHash> image;
  std::vector<Monomial> independent;
  std::vector<Monomial> dead;
  LinearSpan span(A.dim());
  SubalgebraWalk out;

  todo.insert(Monomial());
  image.emplace(Monomial(), A.unit_vector());
  while (!todo.empty()) {
    Monomial m = *todo.begin();
    todo.erase(todo.begin());
    bool skip = false;
    for (const auto& d : dead)
      if (d.divides(m)) skip = true;
    if (skip) continue;
    const RationalVector& v = image.at(m);
    auto rel = span.insert(v);
    if (rel) {
      std::vector<MultiPolyQ::Term> terms{{m, Rational(1)}};
      for (std::size_t j = 0; j < rel->size(); ++j)
        if ((*rel)[j] != 0) terms.push_back({independent[j], -(*rel)[j]});
      out.relations.push_back(MultiPolyQ::from_terms(sub, std::move(terms)));
      dead.push_back(m);
      continue;
    }
    independent.push_back(m);
    for (std::size_t i = 0; i < k; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (image.count(next)) continue;
      image.emplace(next, A.mul_var(i, v));
      todo.insert(next);
    }
  }
  out.dim = independent.size();
  return out;
}

}  // namespace exactlmi
