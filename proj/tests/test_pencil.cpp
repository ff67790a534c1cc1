#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace exactlmi;

namespace {

const std::string kHalfDisk =
    "lmi m=3 n=2 vars=x1,x2\n"
    "entry 1 1 : 1 + x1\n"
    "entry 1 2 : x2\n"
    "entry 2 2 : 1 - x1\n"
    "entry 3 3 : x1\n";

LinearPencil unit_disk() {
  return parse_pencil("lmi m=2 n=2 vars=x1,x2\nentry 1 1 : 1 + x1\nentry 1 2 : x2\nentry 2 2 : 1 - x1\n");
}

RationalMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix M(rows.size(), rows.begin()->size(), Rational(0));
  std::size_t i = 0;
  for (auto r : rows) {
    std::size_t j = 0;
    for (auto v : r) M(i, j++) = v;
    ++i;
  }
  return M;
}

bool same(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("parse the half-disk pencil") {
  LinearPencil P = parse_pencil(kHalfDisk);
  CHECK(P.m() == 3);
  CHECK(P.n() == 2);
  CHECK(same(P.evaluate({0, 1}), rat({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}})));
  CHECK(same(P.evaluate({0, 0}), P.matrices()[0]));
}

TEST_CASE("parse errors and asymmetry") {
  CHECK_THROWS_AS(parse_pencil("lmi m=2 n=1 vars=x1\nentry 1 2 : 2*\n"), PencilParseError);
  CHECK_THROWS_AS(parse_pencil("lmi m=2 n=1 vars=x1\nentry 3 1 : 1\n"), PencilParseError);
  CHECK_THROWS_AS(parse_pencil("lmi m=2 n=1 vars=x1\nentry 1 1 : x1^2\n"), PencilParseError);
  CHECK_THROWS_AS(parse_pencil("lmi m=2 n=1 vars=x1\nentry 1 2 : x1\nentry 2 1 : 2*x1\n"), AsymmetryError);
  CHECK_NOTHROW(parse_pencil("lmi m=2 n=1 vars=x1\nentry 1 2 : x1\nentry 2 1 : x1\n"));
  std::vector<RationalMatrix> mats{rat({{1, 0}, {0, 1}}), rat({{0, 1}, {2, 0}})};
  CHECK_THROWS_AS(LinearPencil(mats, {"x1"}), AsymmetryError);
  try {
    LinearPencil(mats, {"x1"});
  } catch (const AsymmetryError& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("scalar pencil") {
  LinearPencil P = parse_pencil("lmi m=1 n=1 vars=x1\nentry 1 1 : x1\n");
  CHECK(P.char_poly_coeffs()(1) == parse_poly("x1", {"x1"}));
  auto z = P.solve_linear_zero();
  REQUIRE(z);
  CHECK((*z)[0] == 0);
}

TEST_CASE("text and json round trip") {
  LinearPencil P = parse_pencil(kHalfDisk);
  LinearPencil Q = parse_pencil(write_pencil(P));
  for (std::size_t k = 0; k <= P.n(); ++k) CHECK(same(P.matrices()[k], Q.matrices()[k]));
  LinearPencil J = parse_pencil_json(
      R"({"m": 3, "n": 2, "vars": ["x1", "x2"], "entries": [{"i": 1, "j": 1, "expr": "1 + x1"}, {"i": 1, "j": 2, "expr": "x2"},
                    {"i": 2, "j": 2, "expr": "1 - x1"}, {"i": 3, "j": 3, "expr": "x1"}]})");
  for (std::size_t k = 0; k <= P.n(); ++k) CHECK(same(P.matrices()[k], J.matrices()[k]));
}

TEST_CASE("characteristic coefficients of the unit disk") {
  LinearPencil P = unit_disk();
  const auto& C = P.char_poly_coeffs();
  CHECK(C(1) == parse_poly("2", P.names()));
  CHECK(C(2) == parse_poly("1 - x1^2 - x2^2", P.names()));
  CHECK(same(P.evaluate({1, 0}), rat({{2, 0}, {0, 0}})));
}

TEST_CASE("trace and determinant identities") {
  LinearPencil P = parse_pencil(kHalfDisk);
  const auto& C = P.char_poly_coeffs();
  const PolyMatrix A = P.as_poly_matrix();
  MultiPolyQ tr(P.ring());
  for (std::size_t i = 0; i < P.m(); ++i) tr += A(i, i);
  CHECK(C(1) == tr);
  CHECK(C(P.m()) == det_poly_matrix(A));
  CHECK(C(P.m()) == oracle::det(A));
}

TEST_CASE("coefficients commute with evaluation") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4)), n = static_cast<std::size_t>(rng.uniform(1, 3));
    LinearPencil P = gen_random_pencil(m, n, rng.next(), 9);
    RationalVector x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(make_rational(Integer(static_cast<long>(rng.uniform(-20, 20))), Integer(static_cast<long>(rng.uniform(1, 7)))));
    RationalMatrix A = P.evaluate(x);
    for (std::size_t k = 1; k <= m; ++k) CHECK(P.char_poly_coeffs()(k).evaluate(x) == oracle::char_coeff(A, k));
  }
}

TEST_CASE("exact rank at rational points") {
  CHECK(parse_pencil(kHalfDisk).exact_rank_at_rational({0, 1}) == 1);
  CHECK(unit_disk().exact_rank_at_rational({0, 0}) == 2);
  LinearPencil Z = parse_pencil("lmi m=2 n=1 vars=x1\nentry 1 1 : x1\nentry 2 2 : 2*x1\n");
  CHECK(Z.exact_rank_at_rational({0}) == 0);
  CHECK_THROWS(Z.exact_rank_at_rational({0, 1}));

  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    LinearPencil P = gen_random_pencil(4, 2, rng.next(), 5);
    RationalVector x{Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-3, 3))};
    LinearPencil Q = P.permuted({2, 0, 3, 1});
    CHECK(P.exact_rank_at_rational(x) == Q.exact_rank_at_rational(x));
  }
}

TEST_CASE("linear fast path") {
  CHECK_FALSE(parse_pencil(kHalfDisk).solve_linear_zero());
  auto z = parse_pencil("lmi m=2 n=1 vars=x1\nentry 1 1 : x1 - 1\nentry 2 2 : x1 - 1\n").solve_linear_zero();
  REQUIRE(z);
  CHECK((*z)[0] == 1);
}
