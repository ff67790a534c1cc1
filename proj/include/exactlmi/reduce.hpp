#pragma once

// Reduction of a positive-dimensional system to finitely many candidate
// points: critical points of the projection on the first coordinate, then
// generic hyperplane slices when that is not enough.

#include <optional>
#include <stdexcept>
#include <vector>

#include "incidence.hpp"
#include "rur.hpp"

namespace exactlmi {

/// Basis from which the projection onto the first nx variables can be
/// parametrized, when that projection is finite.
struct ProjectionBasis {
  bool empty = false;        // no complex solutions at all
  bool finite = false;       // projection onto the x-block is finite
  bool full_system = false;  // basis is of the whole system (else of its elimination ideal)
  int dimension = -1;        // Krull dimension of the whole system
  GroebnerBasis basis;
};

inline ProjectionBasis finite_projection_basis(const std::vector<MultiPolyQ>& F, std::size_t nx) {
  ProjectionBasis out;
  if (F.empty()) throw std::invalid_argument("empty system");
  const std::size_t N = F.front().nvars();
  GroebnerBasis G = groebner_basis(F, MonomialOrder::degrevlex(N));
  out.dimension = krull_dimension(G);
  if (G.is_unit()) {
    out.empty = out.finite = out.full_system = true;
    out.basis = std::move(G);
    return out;
  }
  if (out.dimension == 0) {
    out.finite = out.full_system = true;
    out.basis = std::move(G);
    return out;
  }
  if (nx < N) {
    GroebnerBasis E = groebner_basis(F, MonomialOrder::eliminate_tail(N, nx));
    GroebnerBasis Gx = elimination_part(E, nx);
    if (!Gx.empty() && krull_dimension(Gx) == 0) {
      out.finite = true;
      out.basis = std::move(Gx);
    }
  }
  return out;
}

/// Parametrization of the solutions of F in the first nx variables, when
/// that projection is finite; nullopt when F has no complex solutions.
inline std::optional<RUR> rur_from_system(const std::vector<MultiPolyQ>& F, std::size_t nx, std::uint64_t seed) {
  ProjectionBasis pb = finite_projection_basis(F, nx);
  if (pb.empty) return std::nullopt;
  if (!pb.finite) throw RurError("solution set is not finite");
  return rur_from_groebner(pb.basis, nx, seed, pb.full_system ? &F : nullptr);
}

/// c x c minors of the Jacobian of F with the column of variable `skip`
/// removed; they vanish exactly where the projection on that variable is
/// critical (or F is singular). Returns nullopt when more than `cap` minors
/// would be needed.
inline std::optional<std::vector<MultiPolyQ>> critical_minors(const std::vector<MultiPolyQ>& F, std::size_t c,
                                                              std::size_t skip, std::size_t cap = 500) {
  if (F.empty() || c == 0) return std::vector<MultiPolyQ>{};
  const MonomialOrder order = F.front().order();
  const std::size_t N = order.nvars;
  std::vector<std::size_t> cols;
  for (std::size_t v = 0; v < N; ++v)
    if (v != skip) cols.push_back(v);
  if (c > F.size() || c > cols.size()) return std::vector<MultiPolyQ>{};
  auto binom = [](std::size_t n, std::size_t k) {
    long double b = 1;
    for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<long double>(n - k + i) / i;
    return b;
  };
  if (binom(F.size(), c) * binom(cols.size(), c) > static_cast<long double>(cap)) return std::nullopt;

  std::vector<std::vector<MultiPolyQ>> J(F.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t v : cols) J[i].push_back(F[i].derivative(v));

  std::vector<MultiPolyQ> minors;
  auto rows = enumerate_normalizations(F.size(), F.size() - c);
  auto colsets = enumerate_normalizations(cols.size(), cols.size() - c);
  for (const auto& rs : rows)
    for (const auto& cs : colsets) {
      PolyMatrix M(c, c, MultiPolyQ(order));
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) M(a, b) = J[rs.indices[a] - 1][cs.indices[b] - 1];
      MultiPolyQ d = det_poly_matrix(M);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  return minors;
}

struct Reduction {
  std::vector<MultiPolyQ> equations;
  ProjectionBasis projection;
  std::size_t minors = 0;  // critical equations added
  std::size_t slices = 0;  // hyperplane sections added
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Augments F (in coordinates already in generic position) until its
/// projection onto the first nx variables is finite. Deterministic per seed.
inline Reduction reduce_to_dimension_zero(const std::vector<MultiPolyQ>& F, std::size_t nx, std::uint64_t seed) {
  Reduction out;
  out.equations = F;
  out.projection = finite_projection_basis(F, nx);
  if (out.projection.finite) return out;

  const std::size_t N = F.front().nvars();
  const std::size_t c = N - static_cast<std::size_t>(out.projection.dimension);
  if (auto minors = critical_minors(F, c, 0)) {
    out.minors = minors->size();
    out.equations.insert(out.equations.end(), minors->begin(), minors->end());
    out.projection = finite_projection_basis(out.equations, nx);
    if (out.projection.finite) return out;
  }
  Rng rng(seed);
  const MonomialOrder order = F.front().order();
  for (std::size_t k = 0; k < nx; ++k) {
    const std::size_t v = nx - 1 - k;
    MultiPolyQ slice = MultiPolyQ::variable(order, v) -
                       MultiPolyQ::constant(order, Rational(static_cast<long>(rng.uniform(-99, 99))));
    out.equations.push_back(std::move(slice));
    ++out.slices;
    out.projection = finite_projection_basis(out.equations, nx);
    if (out.projection.finite) return out;
  }
  throw ReductionError("could not reach a finite projection");
}

}  // namespace exactlmi
