#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace exactlmi;

namespace {

std::vector<MultiPolyQ> polys(std::initializer_list<const char*> src, std::vector<std::string> names) {
  std::vector<MultiPolyQ> out;
  for (auto s : src) out.push_back(parse_poly(s, names));
  return out;
}

LinearPencil unit_disk() {
  return parse_pencil("lmi m=2 n=2 vars=x1,x2\nentry 1 1 : 1 + x1\nentry 1 2 : x2\nentry 2 2 : 1 - x1\n");
}

MultiPolyQ random_quadric(Rng& rng, const MonomialOrder& order) {
  std::vector<MultiPolyQ::Term> t;
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; a + b <= 2; ++b) {
      Monomial m;
      m.set(0, a);
      m.set(1, b);
      t.push_back({m, Rational(rng.uniform(-9, 9))});
    }
  return MultiPolyQ::from_terms(order, std::move(t));
}

}  // namespace

TEST_CASE("small reduced bases") {
  const std::vector<std::string> xy{"x", "y"};
  const auto order = MonomialOrder::degrevlex(2);
  CHECK(groebner_basis(polys({"x^2 - 1"}, xy), order).generators == polys({"x^2 - 1"}, xy));
  CHECK(groebner_basis(polys({"x + y", "x - y"}, xy), order).generators == polys({"y", "x"}, xy));
  GroebnerBasis unit = groebner_basis(polys({"x", "x + 1"}, xy), order);
  CHECK(unit.is_unit());
  CHECK(groebner_basis(polys({"0"}, xy), order).empty());
}

TEST_CASE("zero-dimensionality") {
  const std::vector<std::string> xy{"x", "y"};
  const auto order = MonomialOrder::degrevlex(2);
  auto a = is_zero_dimensional(groebner_basis(polys({"x", "y"}, xy), order));
  CHECK(a.zero_dimensional);
  CHECK(a.solution_bound == 1u);
  CHECK_FALSE(is_zero_dimensional(groebner_basis(polys({"x*y"}, xy), order)).zero_dimensional);
  auto c = is_zero_dimensional(groebner_basis(polys({"x^2 - 1", "y^2 - 4"}, xy), order));
  CHECK(c.solution_bound == 4u);
}

TEST_CASE("unit disk incidence variety is a curve over the circle") {
  IncidenceSystem S = build_incidence_system(unit_disk(), 1, {{1}});
  GroebnerBasis G = groebner_basis(S.equations, S.order());
  CHECK_FALSE(is_zero_dimensional(G).zero_dimensional);
  CHECK(krull_dimension(G) == 1);

  // The resultant in y of the two equations generates the projection.
  const auto order3 = S.order();
  MultiPolyQ res = oracle::resultant({parse_poly("1 + x1", S.names), parse_poly("x2", S.names)},
                                     {parse_poly("x2", S.names), parse_poly("1 - x1", S.names)});
  CHECK(res == parse_poly("x2^2 + x1^2 - 1", S.names).with_order(order3));
  GroebnerBasis E = groebner_basis(S.equations, MonomialOrder::eliminate_tail(3, 2));
  GroebnerBasis Gx = elimination_part(E, 2);
  REQUIRE(Gx.size() == 1);
  CHECK(Gx.generators[0] == parse_poly("x1^2 + x2^2 - 1", {"x1", "x2"}));
}

TEST_CASE("bases satisfy Buchberger's criterion") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(2, 3)), n = static_cast<std::size_t>(rng.uniform(1, 3));
    LinearPencil P = gen_random_pencil(m, n, rng.next(), 5);
    std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m) - 1));
    auto subsets = enumerate_normalizations(m, r);
    const auto& s = subsets[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(subsets.size()) - 1))];
    IncidenceSystem S = build_incidence_system(P, r, s);
    GroebnerBasis G = groebner_basis(S.equations, S.order());
    CHECK(verify_groebner_basis(G, S.equations));
    CHECK(oracle::is_groebner_basis_of(G.generators, S.equations));
  }
}

TEST_CASE("parametrizations of small systems") {
  auto r1 = rur_from_system(polys({"x1^2 - 2"}, {"x1"}), 1, 1);
  REQUIRE(r1);
  CHECK(r1->q == UniPolyZ{-2, 0, 1});
  CHECK(r1->q0 == UniPolyZ{0, 1});
  CHECK(r1->coords == std::vector<UniPolyZ>{UniPolyZ{2}});

  auto r2 = rur_from_system(polys({"x1 - 3"}, {"x1"}), 1, 1);
  REQUIRE(r2);
  CHECK(r2->q == UniPolyZ{-3, 1});
  CHECK(r2->q0 == UniPolyZ{1});
  CHECK(r2->coords == std::vector<UniPolyZ>{UniPolyZ{3}});

  auto r3 = rur_from_system(polys({"x1^2 - 1"}, {"x1"}), 1, 1);
  REQUIRE(r3);
  CHECK(r3->degree() == 2);
  auto pts = real_points(*r3);
  REQUIRE(pts.size() == 2);
  CHECK(coordinate(pts[0], 0).I == Interval{-1, -1});
  CHECK(coordinate(pts[1], 0).I == Interval{1, 1});

  CHECK_FALSE(rur_from_system(polys({"x1", "x1 - 1"}, {"x1"}), 1, 1));
  CHECK_THROWS_AS(rur_from_system(polys({"x1*x2"}, {"x1", "x2"}), 2, 1), RurError);
}

TEST_CASE("separating forms are seeded") {
  auto F = polys({"x^2 - 1", "y^2 - 1"}, {"x", "y"});
  auto a = rur_from_system(F, 2, 99);
  auto b = rur_from_system(F, 2, 99);
  REQUIRE(a);
  CHECK(*a == *b);
  CHECK(a->degree() == 4);
  CHECK(oracle::residual_vanishes(*a, F));
}

TEST_CASE("solution counts agree with resultants") {
  Rng rng(23);
  const auto order = MonomialOrder::degrevlex(2);
  for (int trial = 0; trial < 15; ++trial) {
    MultiPolyQ f = random_quadric(rng, order), g = random_quadric(rng, order);
    auto R = rur_from_system({f, g}, 2, rng.next());
    // Coefficients of f and g as polynomials in x2.
    auto split = [&](const MultiPolyQ& p) {
      std::vector<MultiPolyQ> c(3, MultiPolyQ(order));
      for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        unsigned e = m[1];
        m.set(1, 0);
        c[e] += MultiPolyQ::monomial(order, m, t.coeff);
      }
      while (c.size() > 1 && c.back().is_zero()) c.pop_back();
      return c;
    };
    auto cf = split(f), cg = split(g);
    if (cf.size() < 3 || cg.size() < 3) continue;
    MultiPolyQ res = oracle::resultant(cf, cg);
    std::vector<Integer> uc;
    UniPolyQ ru;
    for (unsigned d = 0; d <= res.total_degree(); ++d) {
      Monomial m;
      m.set(0, d);
      ru = ru + UniPolyQ::monomial(d, res.coefficient(m));
    }
    if (ru.is_zero()) continue;
    const int distinct = squarefree_part(primitive_integer(ru)).degree();
    REQUIRE(R);
    CHECK(squarefree_part(R->q).degree() == distinct);
    GroebnerBasis G = radical_zero_dim(groebner_basis({f, g}, order));
    CHECK(static_cast<int>(standard_monomials(G).size()) == R->degree());
    CHECK(oracle::residual_vanishes(*R, {f, g}));
  }
}

TEST_CASE("reduction of the unit disk incidence curve") {
  LinearPencil P = unit_disk();
  IncidenceSystem S = build_incidence_system(P, 1, {{1}});
  CoordinateChange cc = random_coordinate_change(8, 2);
  auto F = apply_coordinate_change(S.equations, 2, cc);
  Reduction red = reduce_to_dimension_zero(F, 2, 3);
  CHECK(red.projection.finite);
  CHECK(red.minors > 0);

  auto R = solve_incidence(P, S, 5);
  REQUIRE(R);
  CHECK(oracle::residual_vanishes(*R, {parse_poly("1 - x1^2 - x2^2", P.names())}));
  // Critical points of a linear form on the circle: two real points.
  CHECK(count_real_roots(squarefree_part(R->q)) == 2);

  // An already finite system is returned unchanged.
  auto G = polys({"x1^2 - 2", "x2 - 1"}, {"x1", "x2"});
  Reduction same = reduce_to_dimension_zero(G, 2, 1);
  CHECK(same.equations == G);
  CHECK(same.minors == 0);
  CHECK(same.slices == 0);

  Reduction none = reduce_to_dimension_zero(polys({"x1", "x1 - 1"}, {"x1", "x2"}), 2, 1);
  CHECK(none.projection.empty);
}

TEST_CASE("coordinate transforms keep residuals") {
  auto F = polys({"x1^2 + x2^2 - 5", "x1 - x2 - 1"}, {"x1", "x2"});
  auto R = rur_from_system(F, 2, 1);
  REQUIRE(R);
  CoordinateChange cc = random_coordinate_change(12, 2);
  auto Fp = apply_coordinate_change(F, 2, cc);
  auto Rp = rur_from_system(Fp, 2, 2);
  REQUIRE(Rp);
  RUR back = transform_coordinates(*Rp, cc.Minv);
  CHECK(oracle::residual_vanishes(back, F));
  CHECK(rur_residual_ok(back, F));
}
