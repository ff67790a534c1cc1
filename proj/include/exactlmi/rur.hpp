#pragma once

// Rational univariate parametrizations x_i = q_i(z) / q0(z), q(z) = 0, with
// integer coefficients.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quotient.hpp"
#include "random.hpp"

namespace exactlmi {

struct RUR {
  UniPolyZ q;
  UniPolyZ q0;
  std::vector<UniPolyZ> coords;
  RationalVector form;  // z = sum form_i * x_i at every root

  int degree() const { return q.degree(); }
  bool operator==(const RUR& o) const {
    return q == o.q && q0 == o.q0 && coords == o.coords && form == o.form;
  }
};

class RurError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Scales q0 and the coordinate numerators jointly by a positive rational so
/// that they become integer polynomials without a common content.
inline void clear_parametrization(const UniPolyQ& q0, const std::vector<UniPolyQ>& coords, RUR& out) {
  Integer den = 1;
  auto collect = [&](const UniPolyQ& p) {
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  };
  collect(q0);
  for (const auto& c : coords) collect(c);
  auto to_int = [&](const UniPolyQ& p) {
    std::vector<Integer> c;
    for (const auto& v : p.coeffs()) c.push_back(v.get_num() * divexact(den, v.get_den()));
    return UniPolyZ(std::move(c));
  };
  UniPolyZ z0 = to_int(q0);
  std::vector<UniPolyZ> zc;
  for (const auto& c : coords) zc.push_back(to_int(c));
  Integer g = content(z0);
  for (const auto& c : zc) g = gcd_int(g, content(c));
  if (g > 1) {
    auto shrink = [&](UniPolyZ& p) {
      std::vector<Integer> c = p.coeffs();
      for (auto& v : c) v = divexact(v, g);
      p = UniPolyZ(std::move(c));
    };
    shrink(z0);
    for (auto& c : zc) shrink(c);
  }
  out.q0 = std::move(z0);
  out.coords = std::move(zc);
}

inline UniPolyQ mulmod(const UniPolyQ& a, const UniPolyQ& b, const UniPolyQ& m) { return rem(a * b, m); }

}  // namespace detail

/// Numerator N(z) = q0^d * f(q_1/q0, ...) reduced modulo q, where d is the
/// total degree of f. The sign of f at a root equals sign(N) * sign(q0)^d.
inline UniPolyQ substitute_parametrization(const MultiPolyQ& f, const UniPolyQ& q, const UniPolyQ& q0,
                                           const std::vector<UniPolyQ>& coords) {
  if (f.is_zero()) return {};
  const unsigned d = f.total_degree();
  // powers[var][e] = base^e mod q; var == coords.size() stands for q0.
  std::vector<std::vector<UniPolyQ>> powers(coords.size() + 1);
  auto power = [&](std::size_t var, unsigned e) -> const UniPolyQ& {
    auto& list = powers[var];
    const UniPolyQ& base = var == coords.size() ? q0 : coords[var];
    if (list.empty()) list.push_back(UniPolyQ::constant(1));
    while (list.size() <= e) list.push_back(detail::mulmod(list.back(), base, q));
    return list[e];
  };
  UniPolyQ acc;
  for (const auto& t : f.terms()) {
    UniPolyQ term = UniPolyQ::constant(t.coeff);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (i >= coords.size()) throw std::invalid_argument("polynomial uses variables outside the parametrization");
      term = detail::mulmod(term, power(i, t.mono[i]), q);
    }
    if (d > t.mono.degree()) term = detail::mulmod(term, power(coords.size(), d - t.mono.degree()), q);
    acc = acc + term;
  }
  return acc;
}

inline UniPolyQ substitute_parametrization(const MultiPolyQ& f, const RUR& R) {
  std::vector<UniPolyQ> c;
  for (const auto& p : R.coords) c.push_back(to_rational(p));
  return substitute_parametrization(f, to_rational(R.q), to_rational(R.q0), c);
}

/// Residual test: every equation vanishes at every root of q.
inline bool rur_residual_ok(const RUR& R, const std::vector<MultiPolyQ>& equations) {
  if (R.q.degree() < 1) return false;
  const UniPolyQ sq = to_rational(squarefree_part(R.q));
  std::vector<UniPolyQ> c;
  for (const auto& p : R.coords) c.push_back(to_rational(p));
  for (const auto& f : equations) {
    if (!rem(substitute_parametrization(f, to_rational(R.q), to_rational(R.q0), c), sq).is_zero()) return false;
  }
  // q0 must be invertible modulo q for the coordinates to be defined.
  return gcd(R.q, R.q0).degree() == 0;
}

/// Builds the parametrization from q (the minimal polynomial of the separating
/// element) and the coordinates g_i(z) with x_i = g_i(z) modulo q.
inline RUR make_rur(const UniPolyQ& minpoly, const std::vector<UniPolyQ>& g, RationalVector form) {
  RUR out;
  out.q = primitive_integer(minpoly);
  const UniPolyQ q = to_rational(out.q);
  const UniPolyQ dq = q.derivative();
  std::vector<UniPolyQ> coords;
  for (const auto& gi : g) coords.push_back(rem(gi * dq, q));
  detail::clear_parametrization(dq, coords, out);
  out.form = std::move(form);
  return out;
}

/// Parametrization of the projection onto the first nx variables of the
/// zero set of a zero-dimensional ideal. Returns nullopt when there are no
/// complex solutions. `source` (defaults to the basis itself) is checked by
/// the residual test before returning.
inline std::optional<RUR> rur_from_groebner(const GroebnerBasis& G, std::size_t nx, std::uint64_t seed,
                                            const std::vector<MultiPolyQ>* source = nullptr,
                                            std::size_t max_tries = 40) {
  if (G.is_unit()) return std::nullopt;
  const GroebnerBasis R = radical_zero_dim(G);
  if (R.is_unit()) return std::nullopt;
  const std::size_t N = R.order.nvars;
  if (nx == 0 || nx > N) throw std::invalid_argument("bad coordinate count");
  QuotientAlgebra A(R);
  const SubalgebraWalk W = walk_subalgebra(A, nx);
  const bool full = A.dim() == W.dim;
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < nx + max_tries; ++attempt) {
    RationalVector c(N, Rational(0));
    if (attempt < nx) {
      c[attempt] = 1;
    } else {
      const std::int64_t bound = 2 + static_cast<std::int64_t>(attempt - nx);
      bool nonzero = false;
      while (!nonzero) {
        for (std::size_t i = 0; i < nx; ++i) {
          c[i] = Rational(static_cast<long>(rng.uniform(-bound, bound)));
          if (c[i] != 0) nonzero = true;
        }
      }
    }
    LinearSpan span(A.dim());
    UniPolyQ mp = A.min_poly([&](const RationalVector& v) { return A.mul_linear(c, Rational(0), v); }, &span);
    if (static_cast<std::size_t>(mp.degree()) != W.dim) continue;

    const std::size_t ncoords = full ? N : nx;
    std::vector<UniPolyQ> g;
    bool ok = true;
    for (std::size_t i = 0; i < ncoords && ok; ++i) {
      auto e = span.express(A.coords(MultiPolyQ::variable(R.order, i)));
      if (!e) ok = false;
      else g.push_back(UniPolyQ(*e));
    }
    if (!ok) continue;
    RationalVector form(c.begin(), c.begin() + nx);
    RUR rur = make_rur(mp, g, form);
    const std::vector<MultiPolyQ>& check = full ? (source ? *source : R.generators) : W.relations;
    if (!rur_residual_ok(rur, check)) throw RurError("parametrization failed the residual test");
    rur.coords.resize(nx);
    return rur;
  }
  throw RurError("no separating linear form found");
}

/// Coordinates mapped by x = T x' (T applied to the numerators; q, q0 unchanged).
inline RUR transform_coordinates(const RUR& R, const RationalMatrix& T) {
  if (T.cols() != R.coords.size()) throw std::invalid_argument("transform size mismatch");
  std::vector<UniPolyQ> coords;
  for (std::size_t i = 0; i < T.rows(); ++i) {
    UniPolyQ acc;
    for (std::size_t j = 0; j < T.cols(); ++j)
      if (T(i, j) != 0) acc = acc + to_rational(R.coords[j]) * T(i, j);
    coords.push_back(std::move(acc));
  }
  RUR out;
  out.q = R.q;
  detail::clear_parametrization(to_rational(R.q0), coords, out);
  // z = f . x' and x' = T^{-1} x, so z = (T^{-T} f) . x.
  auto Tinv = inverse(T);
  if (!Tinv) throw std::invalid_argument("singular coordinate transform");
  out.form.assign(T.rows(), Rational(0));
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j) out.form[i] += (*Tinv)(j, i) * R.form[j];
  return out;
}

}  // namespace exactlmi
