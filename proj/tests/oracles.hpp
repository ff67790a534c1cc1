#pragma once

// Reference computations used only by the tests. They are deliberately naive
// and share no algorithmic code with the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "exactlmi/exactlmi.hpp"

namespace oracle {

using exactlmi::Integer;
using exactlmi::MultiPolyQ;
using exactlmi::Rational;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// Leibniz expansion over all permutations.
template <class T, class Entry>
T leibniz(std::size_t n, Entry&& entry, T zero, T one) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = zero;
  do {
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * entry(i, p[i]);
    if (permutation_sign(p) > 0) total = total + term;
    else total = total - term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline MultiPolyQ det(const exactlmi::PolyMatrix& M) {
  const auto order = M(0, 0).order();
  return leibniz<MultiPolyQ>(
      M.rows(), [&](std::size_t i, std::size_t j) { return M(i, j); }, MultiPolyQ(order),
      MultiPolyQ::constant(order, 1));
}

inline Rational det(const exactlmi::RationalMatrix& M) {
  if (M.rows() == 0) return 1;
  return leibniz<Rational>(
      M.rows(), [&](std::size_t i, std::size_t j) { return M(i, j); }, Rational(0), Rational(1));
}

inline exactlmi::RationalMatrix principal(const exactlmi::RationalMatrix& A, const std::vector<std::size_t>& idx) {
  exactlmi::RationalMatrix S(idx.size(), idx.size(), Rational(0));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) S(a, b) = A(idx[a], idx[b]);
  return S;
}

/// Every subset of {0..m-1} of size k.
inline void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Coefficient of s^(m-k) in det(sI + A): the sum of the k x k principal minors.
inline Rational char_coeff(const exactlmi::RationalMatrix& A, std::size_t k) {
  Rational sum = 0;
  for_each_subset(A.rows(), k, [&](const std::vector<std::size_t>& idx) { sum += det(principal(A, idx)); });
  return sum;
}

/// A symmetric matrix is PSD iff every principal minor is nonnegative.
inline bool psd_by_minors(const exactlmi::RationalMatrix& A) {
  bool ok = true;
  for (std::size_t k = 1; k <= A.rows() && ok; ++k)
    for_each_subset(A.rows(), k, [&](const std::vector<std::size_t>& idx) {
      if (det(principal(A, idx)) < 0) ok = false;
    });
  return ok;
}

/// Largest k with a nonzero k x k minor (all row and column subsets).
inline std::size_t rank_by_minors(const exactlmi::RationalMatrix& A) {
  for (std::size_t k = std::min(A.rows(), A.cols()); k >= 1; --k) {
    bool found = false;
    for_each_subset(A.rows(), k, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(A.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        exactlmi::RationalMatrix S(k, k, Rational(0));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) S(a, b) = A(rows[a], cols[b]);
        if (det(S) != 0) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

/// Horner evaluation of an ascending coefficient list.
inline Rational eval(const std::vector<Integer>& c, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + Rational(c[i]);
  return r;
}

/// Bisection on [lo, hi] where p changes sign; returns an interval of width <= w.
inline std::pair<Rational, Rational> bisect(const std::vector<Integer>& p, Rational lo, Rational hi, const Rational& w) {
  int slo = exactlmi::sign(eval(p, lo));
  while (hi - lo > w) {
    Rational mid = (lo + hi) / 2;
    int sm = exactlmi::sign(eval(p, mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

/// Expanded product of linear factors (den*z - num) for the given rationals.
inline exactlmi::UniPolyZ from_roots(const std::vector<Rational>& roots) {
  exactlmi::UniPolyZ p{Integer(1)};
  for (const auto& r : roots) p = p * exactlmi::UniPolyZ{Integer(-r.get_num()), Integer(r.get_den())};
  return p;
}

/// Sylvester resultant of two polynomials given by ascending coefficients in a
/// variable, each coefficient a MultiPolyQ in the remaining variables.
inline MultiPolyQ resultant(const std::vector<MultiPolyQ>& f, const std::vector<MultiPolyQ>& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  const auto order = f[0].order();
  exactlmi::PolyMatrix S(n, n, MultiPolyQ(order));
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j <= df; ++j) S(i, i + j) = f[df - j];
  for (std::size_t i = 0; i < df; ++i)
    for (std::size_t j = 0; j <= dg; ++j) S(dg + i, i + j) = g[dg - j];
  return det(S);
}

/// Remainder of f under naive multivariate division by G (first divisor wins).
inline MultiPolyQ divide_remainder(MultiPolyQ f, const std::vector<MultiPolyQ>& G) {
  std::vector<MultiPolyQ::Term> rest;
  while (!f.is_zero()) {
    bool divided = false;
    for (const auto& g : G) {
      if (g.is_zero() || !g.lm().divides(f.lm())) continue;
      f = f - g.mul_term(f.lc() / g.lc(), g.lm().quotient_of(f.lm()));
      divided = true;
      break;
    }
    if (!divided) {
      rest.push_back(f.leading());
      f = f - MultiPolyQ::monomial(f.order(), f.lm(), f.lc());
    }
  }
  return MultiPolyQ::from_terms(f.order(), std::move(rest));
}

/// Buchberger's criterion checked by naive division.
inline bool is_groebner_basis_of(const std::vector<MultiPolyQ>& G, const std::vector<MultiPolyQ>& F) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const auto l = G[i].lm().lcm(G[j].lm());
      MultiPolyQ s = G[i].mul_term(Rational(1) / G[i].lc(), G[i].lm().quotient_of(l)) -
                     G[j].mul_term(Rational(1) / G[j].lc(), G[j].lm().quotient_of(l));
      if (!divide_remainder(s, G).is_zero()) return false;
    }
  for (auto f : F)
    if (!divide_remainder(f.with_order(G.empty() ? f.order() : G[0].order()), G).is_zero()) return false;
  return true;
}

/// f(q1/q0, ..., qn/q0) * q0^deg(f) reduced modulo m, over Q[z].
inline exactlmi::UniPolyQ substitute(const MultiPolyQ& f, const exactlmi::RUR& R, const exactlmi::UniPolyQ& m) {
  using exactlmi::UniPolyQ;
  const unsigned d = f.total_degree();
  UniPolyQ q0 = exactlmi::to_rational(R.q0);
  UniPolyQ total;
  for (const auto& t : f.terms()) {
    UniPolyQ term = UniPolyQ::constant(t.coeff);
    for (std::size_t i = 0; i < R.coords.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) term = exactlmi::rem(term * exactlmi::to_rational(R.coords[i]), m);
    for (unsigned e = t.mono.degree(); e < d; ++e) term = exactlmi::rem(term * q0, m);
    total = total + term;
  }
  return exactlmi::rem(total, m);
}

/// Every equation vanishes on the parametrized set.
inline bool residual_vanishes(const exactlmi::RUR& R, const std::vector<MultiPolyQ>& F) {
  exactlmi::UniPolyQ m = exactlmi::to_rational(exactlmi::squarefree_part(R.q));
  for (const auto& f : F)
    if (!substitute(f, R, m).is_zero()) return false;
  return true;
}

}  // namespace oracle
