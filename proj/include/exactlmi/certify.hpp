#pragma once

// Positive semidefiniteness and rank of A(x*) from the signs of the
// coefficients p_k of det(sI + A(x*)).

#include <optional>
#include <vector>

#include "pencil.hpp"
#include "realroots.hpp"

namespace exactlmi {

struct Certificate {
  bool psd = false;
  std::size_t rank = 0;
  // signs[k-1] = sign of p_k; unset for coefficients not queried after a negative sign.
  std::vector<std::optional<int>> signs;
};

namespace detail {

/// Fills a certificate from sign queries issued for k = m down to 1.
template <class SignOf>
Certificate certify_with(std::size_t m, SignOf&& sign_of) {
  Certificate c;
  c.signs.assign(m, std::nullopt);
  std::size_t zeros = 0;
  bool in_tail = true;
  for (std::size_t k = m; k >= 1; --k) {
    int s = sign_of(k);
    c.signs[k - 1] = s;
    if (s < 0) {
      c.psd = false;
      c.rank = m - zeros;
      return c;
    }
    if (s == 0 && in_tail) ++zeros;
    else in_tail = false;
  }
  c.psd = true;
  c.rank = m - zeros;
  return c;
}

}  // namespace detail

inline Certificate certify_point(const CharPolyCoeffs& C, ParamPoint& pt) {
  return detail::certify_with(C.size(), [&](std::size_t k) { return sign_at_algebraic(C(k), pt); });
}

inline Certificate certify_rational(const CharPolyCoeffs& C, const RationalVector& x) {
  return detail::certify_with(C.size(), [&](std::size_t k) { return sign(C(k).evaluate(x)); });
}

inline bool rank_consistency_check(const LinearPencil& P, const RationalVector& x, const Certificate& cert) {
  return P.exact_rank_at_rational(x) == cert.rank;
}

}  // namespace exactlmi
