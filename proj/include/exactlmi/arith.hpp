#pragma once

// Exact scalars. Integer and Rational are GMP's C++ classes; mpq_class keeps
// values canonical (lowest terms, positive denominator) after every operation
// that goes through its arithmetic operators.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactlmi {

using Integer = mpz_class;
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "123", "-4/6" or "1.25" (decimal literals are read exactly).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty number");

  auto digits_only = [](std::string_view d, bool allow_sign) {
    if (d.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (d[0] == '-' || d[0] == '+')) i = 1;
    if (i == d.size()) return false;
    for (; i < d.size(); ++i)
      if (d[i] < '0' || d[i] > '9') return false;
    return true;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_only(num, true) || !digits_only(den, false))
      throw ParseError("malformed rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return make_rational(n, d);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.erase(0, 1);
    if (ip.empty()) ip = "0";
    if (!digits_only(ip, false) || (!fp.empty() && !digits_only(fp, false)))
      throw ParseError("malformed decimal '" + s + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Integer n(ip + fp);
    if (neg) n = -n;
    return make_rational(n, scale);
  }
  if (!digits_only(s, true)) throw ParseError("malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Rational(Integer(s));
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
  Rational r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
  r.canonicalize();
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Exact quotient; caller guarantees b | a.
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer floor_of(const Rational& v) { return floor_div(v.get_num(), v.get_den()); }

inline Integer ceil_of(const Rational& v) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return r;
}

inline Rational abs_rat(const Rational& v) { return v < 0 ? Rational(-v) : v; }

/// Bit length of |v| (0 for v = 0).
inline std::size_t bit_length(const Integer& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace exactlmi
