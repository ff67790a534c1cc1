#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace exactlmi {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with inline storage; variables beyond the ring arity stay 0.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t i, unsigned e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVars) throw std::out_of_range("variable index exceeds kMaxVars");
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<std::uint8_t>(e);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = unsigned(exps_[i]) + o.exps_[i];
      if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
      r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // Precondition: divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.exps_[i] = static_cast<std::uint8_t>(o.exps_[i] - exps_[i]);
    r.degree_ = o.degree_ - degree_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] && o.exps_[i]) return false;
    return true;
  }

  /// Degree restricted to variables [lo, hi).
  unsigned block_degree(std::size_t lo, std::size_t hi) const {
    unsigned d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += exps_[i];
    return d;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic order, optionally as a two-block elimination
/// order: variables at index >= split form the block that is eliminated, so
/// any monomial involving them dominates every monomial free of them.
struct MonomialOrder {
  enum class Kind { kDegRevLex, kEliminateTail };
  Kind kind = Kind::kDegRevLex;
  std::size_t split = 0;
  std::size_t nvars = 0;

  static MonomialOrder degrevlex(std::size_t nvars) { return {Kind::kDegRevLex, 0, nvars}; }
  static MonomialOrder eliminate_tail(std::size_t nvars, std::size_t split) {
    return {Kind::kEliminateTail, split, nvars};
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && split == o.split && nvars == o.nvars;
  }

  /// -1, 0, +1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::kDegRevLex) return drl(a, b, 0, kMaxVars, a.degree(), b.degree());
    unsigned ta = a.block_degree(split, kMaxVars), tb = b.block_degree(split, kMaxVars);
    if (int c = drl(a, b, split, kMaxVars, ta, tb)) return c;
    return drl(a, b, 0, split, a.degree() - ta, b.degree() - tb);
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  static int drl(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                 unsigned da, unsigned db) {
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace exactlmi
