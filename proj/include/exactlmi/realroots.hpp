#pragma once

// Real roots of integer polynomials: Descartes bisection isolation, Sturm
// counting, refinement, exact signs of polynomials at parametrized points and
// decimal-digit enclosures.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rur.hpp"
#include "unipoly.hpp"

namespace exactlmi {

struct Interval {
  Rational lo, hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

inline bool intersects(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

/// Interval enclosure of p over [I.lo, I.hi] by Horner's scheme.
template <class C>
Interval interval_eval(const UniPoly<C>& p, const Interval& I) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  const auto& c = p.coeffs();
  Interval acc{Rational(c.back()), Rational(c.back())};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    Rational a = acc.lo * I.lo, b = acc.lo * I.hi, d = acc.hi * I.lo, e = acc.hi * I.hi;
    Rational lo = std::min({a, b, d, e}), hi = std::max({a, b, d, e});
    acc = {lo + Rational(c[i]), hi + Rational(c[i])};
  }
  return acc;
}

// ---------------------------------------------------------------- Sturm

inline std::vector<UniPolyZ> sturm_sequence(const UniPolyZ& p) {
  std::vector<UniPolyZ> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    UniPolyZ r = rem_scaled(s[s.size() - 2], s.back());
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  if (s.back().is_zero()) s.pop_back();
  return s;
}

inline std::size_t sturm_variations(const std::vector<UniPolyZ>& s, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : s) {
    int sg = p.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

/// Number of distinct real roots of p in the half-open interval (a, b].
inline std::size_t sturm_count(const UniPolyZ& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  auto s = sturm_sequence(squarefree_part(p));
  return sturm_variations(s, a) - sturm_variations(s, b);
}

/// Number of distinct real roots of p in the closed interval I.
inline std::size_t sturm_count_closed(const UniPolyZ& p, const Interval& I) {
  if (p.degree() < 1) return 0;
  std::size_t n = sturm_count(p, I.lo, I.hi);
  if (p.sign_at(I.lo) == 0) ++n;
  return n;
}

inline std::size_t count_real_roots(const UniPolyZ& p) {
  if (p.degree() < 1) return 0;
  UniPolyZ sq = squarefree_part(p);
  Rational B = pow_rat(Rational(2), root_bound_log2(sq));
  return sturm_count(sq, -B, B);
}

// ---------------------------------------------------------------- isolation

namespace detail {

/// p(x/2) * 2^deg, integer coefficients.
inline UniPolyZ halve_var(const UniPolyZ& p) {
  std::vector<Integer> c = p.coeffs();
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] <<= static_cast<mp_bitcnt_t>(d - i);
  return UniPolyZ(std::move(c));
}

/// Upper bound on the number of roots in (0, 1) via Descartes' rule.
inline std::size_t descartes_01(const UniPolyZ& p) { return p.reversed().taylor_shift(Integer(1)).sign_variations(); }

/// Roots of p in (0, 1): appends (c, k, exact) triples meaning the open
/// interval (c/2^k, (c+1)/2^k), or the exact point c/2^k when exact is true.
struct DyadicPiece {
  Integer c;
  unsigned k;
  bool exact;
};

inline void isolate_unit(const UniPolyZ& p0, std::vector<DyadicPiece>& out) {
  struct Task {
    UniPolyZ p;
    Integer c;
    unsigned k;
  };
  std::vector<Task> stack{{p0, Integer(0), 0}};
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    std::size_t v = descartes_01(t.p);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back({t.c, t.k, false});
      continue;
    }
    UniPolyZ left = halve_var(t.p);
    UniPolyZ right = left.taylor_shift(Integer(1));
    Integer mid = 2 * t.c + 1;
    if (right.coeffs().front() == 0) {
      // The midpoint is a root: record it and deflate.
      out.push_back({mid, t.k + 1, true});
      std::vector<Integer> c(right.coeffs().begin() + 1, right.coeffs().end());
      right = UniPolyZ(std::move(c));
      left = right.taylor_shift(Integer(-1));
    }
    stack.push_back({std::move(right), mid, t.k + 1});
    stack.push_back({std::move(left), 2 * t.c, t.k + 1});
  }
}

}  // namespace detail

/// Isolating intervals of the real roots of q, sorted increasingly. Rational
/// roots are returned as point intervals.
inline std::vector<Interval> isolate_real_roots(const UniPolyZ& q) {
  if (q.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  std::vector<Interval> roots;
  if (q.degree() < 1) return roots;
  const UniPolyZ sq = squarefree_part(q);
  UniPolyZ p = sq;
  if (p.coeffs().front() == 0) {
    roots.push_back({Rational(0), Rational(0)});
    std::vector<Integer> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = UniPolyZ(std::move(c));
  }
  if (p.degree() >= 1) {
    const unsigned kb = root_bound_log2(p);
    const Rational B = pow_rat(Rational(2), kb);
    for (int side : {1, -1}) {
      // Roots of p in (0, side*B) correspond to roots of p(side*B*x) in (0, 1).
      UniPolyZ s = side > 0 ? p : p.negate_var();
      s = s.scale_var(Integer(1) << static_cast<mp_bitcnt_t>(kb));
      std::vector<detail::DyadicPiece> pieces;
      detail::isolate_unit(primitive_part(s), pieces);
      for (const auto& piece : pieces) {
        Rational a = Rational(piece.c) / pow_rat(Rational(2), piece.k) * B;
        Rational b = piece.exact ? a : Rational(piece.c + 1) / pow_rat(Rational(2), piece.k) * B;
        a.canonicalize();
        b.canonicalize();
        if (side > 0) roots.push_back({a, b});
        else roots.push_back({Rational(-b), Rational(-a)});
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  // Neighbours of 0 or of a deflated midpoint root have that root as an
  // endpoint; shrink until no endpoint is a root of sq.
  const UniPolyZ dsq = sq.derivative();
  for (auto& I : roots) {
    while (!I.is_point() && (sq.sign_at(I.lo) == 0 || sq.sign_at(I.hi) == 0)) {
      Rational m = (I.lo + I.hi) / 2;
      int sm = sq.sign_at(m);
      if (sm == 0) {
        I = {m, m};
        break;
      }
      int inner = sq.sign_at(I.lo);
      if (inner == 0) inner = dsq.sign_at(I.lo);  // simple root: sign just to the right
      if (sm != inner) I.hi = m;
      else I.lo = m;
    }
  }
  // Promote rational roots to exact points.
  const Integer& lc = p.lc();
  for (auto& I : roots) {
    if (I.is_point()) continue;
    int slo = p.sign_at(I.lo);
    // A rational root k/b needs b | lc(p); isolate to width below 1/lc.
    while (I.width() * Rational(abs(lc)) >= 1) {
      Rational m = (I.lo + I.hi) / 2;
      int sm = p.sign_at(m);
      if (sm == 0) {
        I = {m, m};
        break;
      }
      if (sm == slo) I.lo = m;
      else I.hi = m;
      slo = p.sign_at(I.lo);
    }
    if (I.is_point()) continue;
    Rational cand = Rational(ceil_of(I.lo * Rational(lc)), lc);
    cand.canonicalize();
    if (cand > I.lo && cand < I.hi && p.sign_at(cand) == 0) I = {cand, cand};
  }
  return roots;
}

/// One bisection step keeping the root of p (squarefree, root isolated in I).
inline Interval bisect_once(const UniPolyZ& p, const Interval& I) {
  if (I.is_point()) return I;
  Rational m = (I.lo + I.hi) / 2;
  int sm = p.sign_at(m);
  if (sm == 0) return {m, m};
  int slo = p.sign_at(I.lo);
  if (sm == slo) return {m, I.hi};
  return {I.lo, m};
}

/// Refines I (isolating a root of squarefree p) to width at most `width`.
inline Interval refine_interval(const UniPolyZ& p, Interval I, const Rational& width) {
  while (!I.is_point() && I.width() > width) I = bisect_once(p, I);
  return I;
}

// ---------------------------------------------------------------- real algebraic numbers

/// A real algebraic number: the unique root of the squarefree polynomial p
/// inside the isolating interval I.
struct RealAlgebraic {
  UniPolyZ p;
  Interval I;

  bool is_rational() const { return I.is_point(); }
  void refine() { I = bisect_once(p, I); }
  void refine_to(const Rational& w) { I = refine_interval(p, I, w); }
};

/// Index of the isolating interval in `cells` (disjoint, isolating the roots
/// of g) that contains a, which must be a root of g.
inline std::size_t locate_root(RealAlgebraic& a, const std::vector<Interval>& cells) {
  for (;;) {
    std::size_t hits = 0, last = 0;
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (intersects(a.I, cells[j])) {
        ++hits;
        last = j;
      }
    if (hits == 1) return last;
    if (hits == 0 || a.is_rational()) {
      // A point interval must lie in exactly one cell; otherwise a is not a root of g.
      throw std::logic_error("algebraic number is not a root of the given polynomial");
    }
    a.refine();
  }
}

/// Whether a is a root of g (exact).
inline bool is_root_of(const RealAlgebraic& a, const UniPolyZ& g) {
  if (g.degree() < 1) return g.is_zero();
  if (a.is_rational()) return g.sign_at(a.I.lo) == 0;
  UniPolyZ h = gcd(a.p, g);
  if (h.degree() < 1) return false;
  // h divides p, so it has at most one root in I, and the endpoints are not roots.
  return h.sign_at(a.I.lo) != h.sign_at(a.I.hi);
}

inline bool equal(RealAlgebraic a, RealAlgebraic b) {
  if (a.is_rational() && b.is_rational()) return a.I.lo == b.I.lo;
  if (a.is_rational()) return is_root_of(b, UniPolyZ{Integer(-a.I.lo.get_num()), Integer(a.I.lo.get_den())});
  if (b.is_rational()) return is_root_of(a, UniPolyZ{Integer(-b.I.lo.get_num()), Integer(b.I.lo.get_den())});
  UniPolyZ g = gcd(a.p, b.p);
  if (g.degree() < 1) return false;
  if (!is_root_of(a, g) || !is_root_of(b, g)) return false;
  auto cells = isolate_real_roots(g);
  return locate_root(a, cells) == locate_root(b, cells);
}

/// Exact comparison of two real algebraic numbers (-1, 0, +1).
inline int compare(RealAlgebraic a, RealAlgebraic b) {
  if (equal(a, b)) return 0;
  for (;;) {
    if (a.I.hi < b.I.lo) return -1;
    if (b.I.hi < a.I.lo) return 1;
    a.refine();
    b.refine();
  }
}

// ---------------------------------------------------------------- parametrized points

/// A root of an RUR: q's squarefree part and an isolating interval for it.
struct ParamPoint {
  RUR rur;
  UniPolyZ sq;  // squarefree part of rur.q
  Interval root;
};

inline std::vector<ParamPoint> real_points(const RUR& rur) {
  std::vector<ParamPoint> pts;
  UniPolyZ sq = squarefree_part(rur.q);
  for (const auto& I : isolate_real_roots(sq)) pts.push_back({rur, sq, I});
  return pts;
}

namespace detail {

/// Integer polynomial proportional to p by a positive factor.
inline UniPolyZ positive_integer(const UniPolyQ& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& v : p.coeffs()) den = lcm(den, v.get_den());
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) c.push_back(v.get_num() * divexact(den, v.get_den()));
  return UniPolyZ(std::move(c));
}

/// Sign of h at the root (h coprime to sq near the root is required for termination).
inline int sign_nonzero_at(const UniPolyZ& h, const UniPolyZ& sq, Interval& root) {
  for (;;) {
    if (root.is_point()) return h.sign_at(root.lo);
    Interval v = interval_eval(h, root);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    root = bisect_once(sq, root);
  }
}

}  // namespace detail

/// Exact sign of h(z) at the root (h need not be coprime to q).
inline int sign_at_root(const UniPolyZ& h, ParamPoint& pt) {
  if (h.is_zero()) return 0;
  if (pt.root.is_point()) return h.sign_at(pt.root.lo);
  UniPolyZ g = gcd(pt.sq, h);
  if (g.degree() >= 1 && g.sign_at(pt.root.lo) != g.sign_at(pt.root.hi)) return 0;
  return detail::sign_nonzero_at(h, pt.sq, pt.root);
}

/// Exact sign of the polynomial P (in the RUR's coordinates) at the point.
inline int sign_at_algebraic(const MultiPolyQ& P, ParamPoint& pt) {
  if (P.is_zero()) return 0;
  if (P.is_constant()) return sign(P.constant_term());
  UniPolyZ N = detail::positive_integer(substitute_parametrization(P, pt.rur));
  int s = sign_at_root(N, pt);
  if (s == 0) return 0;
  if (P.total_degree() % 2 == 1) s *= sign_at_root(pt.rur.q0, pt);
  return s;
}

/// Coordinate i of the point as a real algebraic number. Its defining
/// polynomial is the minimal polynomial of q_i / q0 modulo the squarefree q.
inline RealAlgebraic coordinate(ParamPoint& pt, std::size_t i) {
  const UniPolyQ q = to_rational(pt.sq);
  const UniPolyQ h = rem(to_rational(pt.rur.coords.at(i)) * inverse_mod(to_rational(pt.rur.q0), q), q);
  const int d = q.degree();
  // Krylov sequence of h in Q[z]/(q) with the power basis.
  LinearSpan span(static_cast<std::size_t>(d));
  auto vec = [&](const UniPolyQ& f) {
    RationalVector v(d, Rational(0));
    for (int k = 0; k <= f.degree(); ++k) v[k] = f.coeffs()[k];
    return v;
  };
  UniPolyQ power = UniPolyQ::constant(1);
  UniPolyQ mp;
  for (int k = 0;; ++k) {
    auto rel = span.insert(vec(power));
    if (rel) {
      std::vector<Rational> c(k + 1, Rational(0));
      for (std::size_t j = 0; j < rel->size(); ++j) c[j] = -(*rel)[j];
      c[k] = 1;
      mp = UniPolyQ(std::move(c));
      break;
    }
    power = rem(power * h, q);
  }
  RealAlgebraic out;
  out.p = squarefree_part(primitive_integer(mp));
  const std::vector<Interval> cells = isolate_real_roots(out.p);
  // Enclose q_i/q0 over the root interval until it meets a single cell.
  for (;;) {
    Interval num = interval_eval(pt.rur.coords[i], pt.root);
    Interval den = interval_eval(pt.rur.q0, pt.root);
    if (den.lo > 0 || den.hi < 0) {
      Rational a = num.lo / den.lo, b = num.lo / den.hi, c = num.hi / den.lo, e = num.hi / den.hi;
      Interval enc{std::min({a, b, c, e}), std::max({a, b, c, e})};
      std::size_t hits = 0, last = 0;
      for (std::size_t j = 0; j < cells.size(); ++j)
        if (intersects(enc, cells[j])) {
          ++hits;
          last = j;
        }
      if (hits == 1) {
        out.I = cells[last];
        return out;
      }
      if (hits == 0) throw std::logic_error("coordinate enclosure misses every root");
    }
    if (pt.root.is_point()) throw std::logic_error("denominator vanishes at a rational root");
    pt.root = bisect_once(pt.sq, pt.root);
  }
}

// ---------------------------------------------------------------- decimal digits

namespace detail {

/// floor(log10 |v|) for v != 0.
inline long decimal_exponent(const Rational& v) {
  Rational a = abs_rat(v);
  long e = static_cast<long>((static_cast<double>(bit_length(a.get_num())) -
                              static_cast<double>(bit_length(a.get_den()))) * 0.30102999566398120);
  Rational p = e >= 0 ? Rational(pow_int(10, e)) : Rational(1) / Rational(pow_int(10, -e));
  while (p > a) {
    p /= 10;
    --e;
  }
  while (p * 10 <= a) {
    p *= 10;
    ++e;
  }
  return e;
}

inline Rational pow10(long e) { return e >= 0 ? Rational(pow_int(10, e)) : Rational(1) / Rational(pow_int(10, -e)); }

/// v rounded to `digits` significant decimal digits, as (mantissa, exponent)
/// with v ~ mantissa * 10^exponent (round half away from zero).
inline std::pair<Integer, long> round_significant(const Rational& v, unsigned digits) {
  if (v == 0) return {Integer(0), 0};
  long e = decimal_exponent(v) - static_cast<long>(digits) + 1;
  Rational s = abs_rat(v) / pow10(e);
  Integer m = floor_of(s + Rational(1, 2));
  if (v < 0) m = -m;
  // Normalize a carry such as 9.99 -> 10.0 to a fixed mantissa length.
  if (abs(m) == pow_int(10, digits)) {
    m /= 10;
    ++e;
  }
  return {m, e};
}

}  // namespace detail

/// Whether every number in I rounds to the same `digits`-significant decimal
/// and the relative width is at most 10^-digits.
inline bool meets_digits(const Interval& I, unsigned digits) {
  if (I.is_point()) return true;
  if (I.lo <= 0 && I.hi >= 0) return false;
  Rational mag = std::min(abs_rat(I.lo), abs_rat(I.hi));
  if (I.width() > mag * detail::pow10(-static_cast<long>(digits))) return false;
  return detail::round_significant(I.lo, digits) == detail::round_significant(I.hi, digits);
}

/// Refines a until its interval meets the digit contract. The relative width
/// is also capped at 10^-(digits+10), which stops values sitting exactly on a
/// rounding boundary from refining forever.
inline void refine_to_digits(RealAlgebraic& a, unsigned digits) {
  for (;;) {
    if (a.is_rational() || meets_digits(a.I, digits)) return;
    if (!(a.I.lo <= 0 && a.I.hi >= 0)) {
      Rational mag = std::min(abs_rat(a.I.lo), abs_rat(a.I.hi));
      if (a.I.width() <= mag * detail::pow10(-static_cast<long>(digits) - 10)) return;
    }
    a.refine();
  }
}

/// Coordinate enclosure of a parametrized point to `digits` significant digits.
inline std::vector<Interval> eval_rur_box(ParamPoint& pt, unsigned digits) {
  std::vector<Interval> box;
  for (std::size_t i = 0; i < pt.rur.coords.size(); ++i) {
    RealAlgebraic c = coordinate(pt, i);
    refine_to_digits(c, digits);
    box.push_back(c.I);
  }
  return box;
}

}  // namespace exactlmi
