#pragma once

// Dense univariate polynomials, coefficients stored by ascending degree.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace exactlmi {

template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const C& v) { return UniPoly(std::vector<C>{v}); }
  static UniPoly x() { return UniPoly(std::vector<C>{C(0), C(1)}); }
  static UniPoly monomial(std::size_t d, const C& v = C(1)) {
    std::vector<C> c(d + 1, C(0));
    c[d] = v;
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& lc() const { return c_.back(); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<C> c(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> c(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const UniPoly& a, const C& s) {
    if (s == 0) return {};
    UniPoly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  /// Horner evaluation in any ring R accepting C scalars.
  template <class R>
  R evaluate(const R& at) const {
    if (c_.empty()) return at - at;
    R acc = at - at + R(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * at + R(c_[i]);
    return acc;
  }

  Rational eval(const Rational& at) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + Rational(c_[i]);
    return acc;
  }

  /// Sign at a rational point without forming the rational value.
  int sign_at(const Rational& at) const {
    if constexpr (std::is_same_v<C, Integer>) {
      // den^d * p(num/den) as an integer.
      const Integer& num = at.get_num();
      const Integer& den = at.get_den();
      Integer acc = 0, dpow = 1;
      for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * num + c_[i] * dpow;
        dpow *= den;
      }
      return sgn(acc);
    } else {
      return sgn(eval(at));
    }
  }

  /// p(x + s).
  UniPoly taylor_shift(const C& s) const {
    std::vector<C> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j-- > i;) a[j] += s * a[j + 1];
    return UniPoly(std::move(a));
  }

  /// x^d p(1/x), d = deg p.
  UniPoly reversed() const {
    std::vector<C> a(c_.rbegin(), c_.rend());
    return UniPoly(std::move(a));
  }

  /// p(s*x).
  UniPoly scale_var(const C& s) const {
    std::vector<C> a = c_;
    C pw = 1;
    for (auto& v : a) {
      v *= pw;
      pw *= s;
    }
    return UniPoly(std::move(a));
  }

  /// p(-x).
  UniPoly negate_var() const {
    std::vector<C> a = c_;
    for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
    return UniPoly(std::move(a));
  }

  std::size_t sign_variations() const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& x : c_) {
      int s = sgn(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Maple-style rendering, highest degree first, e.g. "_Z^2-2".
  std::string to_string(const std::string& var = "_Z") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      C v = c_[i];
      bool neg = v < 0;
      if (neg) v = -v;
      if (neg) out += "-";
      else if (!out.empty()) out += "+";
      if (i == 0) {
        out += exactlmi::to_string(v);
        continue;
      }
      if (v != 1) out += exactlmi::to_string(v) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  std::vector<C>& mutable_coeffs() { return c_; }
  void normalize() { trim(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

using UniPolyZ = UniPoly<Integer>;
using UniPolyQ = UniPoly<Rational>;

inline Integer content(const UniPolyZ& p) {
  Integer g = 0;
  for (const auto& v : p.coeffs()) {
    g = gcd_int(g, v);
    if (g == 1) break;
  }
  return g;
}

/// Primitive part with positive leading coefficient.
inline UniPolyZ primitive_part(const UniPolyZ& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.lc() < 0) g = -g;
  std::vector<Integer> c = p.coeffs();
  for (auto& v : c) v = divexact(v, g);
  return UniPolyZ(std::move(c));
}

inline UniPolyQ to_rational(const UniPolyZ& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return UniPolyQ(std::move(c));
}

/// Scales a rational polynomial to a primitive integer one (positive lc).
inline UniPolyZ primitive_integer(const UniPolyQ& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& v : p.coeffs()) den = lcm(den, v.get_den());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_num() * divexact(den, v.get_den()));
  return primitive_part(UniPolyZ(std::move(c)));
}

/// Euclidean division over Q; throws on a zero divisor.
inline std::pair<UniPolyQ, UniPolyQ> divmod(const UniPolyQ& a, const UniPolyQ& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPolyQ(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(a.coeffs().size() - b.coeffs().size() + 1, Rational(0));
  const Rational inv = Rational(1) / b.lc();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = r[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {UniPolyQ(std::move(q)), UniPolyQ(std::move(r))};
}

inline UniPolyQ rem(const UniPolyQ& a, const UniPolyQ& b) { return divmod(a, b).second; }

/// Remainder of integer polynomials, returned as a primitive integer polynomial
/// with the sign of the true rational remainder preserved up to a positive factor.
inline UniPolyZ rem_scaled(const UniPolyZ& a, const UniPolyZ& b) {
  UniPolyQ r = rem(to_rational(a), to_rational(b));
  if (r.is_zero()) return {};
  Integer den = 1;
  for (const auto& v : r.coeffs()) den = lcm(den, v.get_den());
  std::vector<Integer> c;
  for (const auto& v : r.coeffs()) c.push_back(v.get_num() * divexact(den, v.get_den()));
  UniPolyZ z(std::move(c));
  Integer g = content(z);
  std::vector<Integer> d = z.coeffs();
  for (auto& v : d) v = divexact(v, g);
  return UniPolyZ(std::move(d));
}

/// Exact quotient a / b over Z; throws if b does not divide a.
inline UniPolyZ divexact(const UniPolyZ& a, const UniPolyZ& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> c;
  for (const auto& v : q.coeffs()) {
    if (v.get_den() != 1) throw std::domain_error("inexact polynomial division");
    c.push_back(v.get_num());
  }
  return UniPolyZ(std::move(c));
}

inline bool divides(const UniPolyZ& b, const UniPolyZ& a) {
  if (b.is_zero()) return a.is_zero();
  return rem(to_rational(a), to_rational(b)).is_zero();
}

/// Primitive gcd with positive leading coefficient (primitive remainder sequence).
inline UniPolyZ gcd(const UniPolyZ& a, const UniPolyZ& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  UniPolyZ u = primitive_part(a), v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    UniPolyZ r = rem_scaled(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(u);
}

/// q / gcd(q, q'), primitive with positive leading coefficient.
inline UniPolyZ squarefree_part(const UniPolyZ& q) {
  if (q.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (q.degree() == 0) return UniPolyZ::constant(1);
  UniPolyZ g = gcd(q, q.derivative());
  return primitive_part(divexact(primitive_part(q), g));
}

/// Inverse of a modulo m over Q; throws when gcd(a, m) is not constant.
inline UniPolyQ inverse_mod(const UniPolyQ& a, const UniPolyQ& m) {
  UniPolyQ r0 = m, r1 = rem(a, m), s0, s1 = UniPolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPolyQ s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial not invertible modulo m");
  return rem(s0 * (Rational(1) / r0.lc()), m);
}

/// Cauchy-type bound: every real root has |x| < 2^k for the returned k.
inline unsigned root_bound_log2(const UniPolyZ& p) {
  // 1 + max |a_i / a_d| < 2^(maxbits - lcbits + 2), and never below 4.
  std::size_t lc_bits = bit_length(p.lc());
  std::size_t max_bits = 0;
  for (int i = 0; i < p.degree(); ++i) max_bits = std::max(max_bits, bit_length(p.coeffs()[i]));
  long k = static_cast<long>(max_bits) - static_cast<long>(lc_bits) + 2;
  return static_cast<unsigned>(std::max(2L, k));
}

}  // namespace exactlmi
