#pragma once

// Pencil generators for benchmarks and property tests.

#include <stdexcept>

#include "pencil.hpp"
#include "random.hpp"

namespace exactlmi {

/// Dense symmetric m x m pencil in n variables, integer coefficients uniform
/// in [-bound, bound]. Deterministic per seed.
inline LinearPencil gen_random_pencil(std::size_t m, std::size_t n, std::uint64_t seed, std::int64_t bound = 100) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (bound < 0) throw std::invalid_argument("coefficient bound must be nonnegative");
  Rng rng(seed);
  std::vector<RationalMatrix> mats;
  for (std::size_t k = 0; k <= n; ++k) {
    RationalMatrix a(m, m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) a(i, j) = a(j, i) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    mats.push_back(std::move(a));
  }
  return LinearPencil(std::move(mats), LinearPencil::default_names(n));
}

/// Block-diagonal pencil with blocks [[1, 2], [2, x1]] and
/// [[1, x_{k-1}], [x_{k-1}, x_k]] for k = 2..n. Feasible points satisfy
/// x_k >= x_{k-1}^2 and x_1 >= 4.
inline LinearPencil gen_expbits_pencil(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::size_t m = 2 * n;
  std::vector<RationalMatrix> mats(n + 1, RationalMatrix(m, m, Rational(0)));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t a = 2 * k, b = 2 * k + 1;
    mats[0](a, a) = 1;
    if (k == 0) {
      mats[0](a, b) = mats[0](b, a) = 2;
    } else {
      mats[k](a, b) = mats[k](b, a) = 1;
    }
    mats[k + 1](b, b) = 1;
  }
  return LinearPencil(std::move(mats), LinearPencil::default_names(n));
}

}  // namespace exactlmi
