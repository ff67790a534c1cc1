#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace exactlmi;

namespace {

Rational rat(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

LinearPencil load(const std::string& name) { return load_pencil(std::string(EXACTLMI_DATA_DIR) + "/" + name); }

/// S^T diag(d_1(x), ..., d_m(x)) S with affine d_i and an invertible S.
LinearPencil congruent_diagonal(Rng& rng, std::size_t m, std::size_t n, bool identity_congruence) {
  std::vector<RationalMatrix> diag(n + 1, RationalMatrix(m, m, Rational(0)));
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i < m; ++i) diag[k](i, i) = rat(rng.uniform(-3, 3));
  RationalMatrix S = RationalMatrix::identity(m, 0, 1);
  if (!identity_congruence) {
    for (;;) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) S(i, j) = rat(rng.uniform(-2, 2));
      if (oracle::det(S) != 0) break;
    }
  }
  std::vector<RationalMatrix> mats;
  for (const auto& D : diag) mats.push_back(S.transposed() * D * S);
  return LinearPencil(std::move(mats), LinearPencil::default_names(n));
}

}  // namespace

TEST_CASE("certificates at rational points") {
  LinearPencil half = load("half_disk.lmi");
  Certificate c = certify_rational(half.char_poly_coeffs(), {0, 1});
  CHECK(c.psd);
  CHECK(c.rank == 1);
  CHECK(c.signs == std::vector<std::optional<int>>{1, 0, 0});
  CHECK(rank_consistency_check(half, {0, 1}, c));

  LinearPencil disk = load("unit_disk.lmi");
  Certificate d = certify_rational(disk.char_poly_coeffs(), {0, 0});
  CHECK(d.psd);
  CHECK(d.rank == 2);
  CHECK(d.signs == std::vector<std::optional<int>>{1, 1});

  Certificate e = certify_rational(disk.char_poly_coeffs(), {2, 0});
  CHECK_FALSE(e.psd);
  CHECK(e.signs[1] == -1);
  CHECK_FALSE(e.signs[0].has_value());

  LinearPencil degen = load("degenerate.lmi");
  Certificate f = certify_rational(degen.char_poly_coeffs(), {1, 0});
  CHECK(f.psd);
  CHECK(f.rank == oracle::rank_by_minors(degen.evaluate({1, 0})));
  CHECK(rank_consistency_check(degen, {1, 0}, f));
}

TEST_CASE("certificates at algebraic points") {
  LinearPencil disk = load("unit_disk.lmi");
  RUR R;
  R.q = UniPolyZ{-2, 0, 1};
  R.q0 = UniPolyZ{2};
  R.coords = {UniPolyZ{0, 1}, UniPolyZ{0, 1}};
  R.form = {1, 0};
  for (auto& pt : real_points(R)) {
    Certificate c = certify_point(disk.char_poly_coeffs(), pt);
    CHECK(c.psd);
    CHECK(c.rank == 1);
  }
  RUR out;
  out.q = UniPolyZ{-2, 0, 1};
  out.q0 = UniPolyZ{1};
  out.coords = {UniPolyZ{0, 1}, UniPolyZ{}};
  out.form = {1, 0};
  for (auto& pt : real_points(out)) CHECK_FALSE(certify_point(disk.char_poly_coeffs(), pt).psd);
}

TEST_CASE("certificate rank matches elimination rank") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 5)), n = static_cast<std::size_t>(rng.uniform(1, 3));
    const bool diagonal = trial % 2 == 0;
    LinearPencil P = congruent_diagonal(rng, m, n, diagonal);
    // Integer points make some diagonal entries vanish often.
    RationalVector x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(rat(rng.uniform(-2, 2)));
    Certificate c = certify_rational(P.char_poly_coeffs(), x);
    RationalMatrix A = P.evaluate(x);
    CHECK(c.rank == P.exact_rank_at_rational(x));
    CHECK(rank_consistency_check(P, x, c));
    if (diagonal) {
      std::size_t nonzero = 0, negative = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (A(i, i) != 0) ++nonzero;
        if (A(i, i) < 0) ++negative;
      }
      CHECK(c.rank == nonzero);
      CHECK(c.psd == (negative == 0));
    }
    if (m <= 4) {
      CHECK(c.rank == oracle::rank_by_minors(A));
      CHECK(c.psd == oracle::psd_by_minors(A));
    }
    if (P.char_poly_coeffs()(m).evaluate(x) != 0) CHECK(c.rank == m);
  }
}

TEST_CASE("psd decision agrees with principal minors on dense pencils") {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
    LinearPencil P = gen_random_pencil(m, 2, rng.next(), 4);
    RationalVector x{rat(rng.uniform(-5, 5), rng.uniform(1, 3)), rat(rng.uniform(-5, 5), rng.uniform(1, 3))};
    Certificate c = certify_rational(P.char_poly_coeffs(), x);
    CHECK(c.psd == oracle::psd_by_minors(P.evaluate(x)));
  }
}
