#include <doctest.h>

#include <cmath>

#include "snorm/catalog.hpp"
#include "snorm/generators.hpp"
#include "snorm/rhoades.hpp"

using namespace snorm;

TEST_CASE("NS25 for x/2 under sum_abs at (1,0), (0,1)") {
  const auto t = builtin_map("half", 2);
  const auto v = ns25_at(t, make_sum_abs_snorm(2), vec({1, 0}), vec({0, 1}));
  CHECK(v.lhs == doctest::Approx(std::sqrt(2.0)));
  CHECK(v.terms[0] == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK(v.rhs >= v.terms[0]);
  CHECK(v.holds);
  CHECK(v.margin == v.rhs - v.lhs);
}

TEST_CASE("S25 and NR25 for x/2 at x=1, y=0") {
  const auto t = builtin_map("half", 1);
  CHECK(s25_at(t, smetric_from_snorm(make_sum_abs_snorm(1)), vec({1}), vec({0})).holds);
  const auto v = nr25_at(t, make_euclidean_norm(1), vec({1}), vec({0}));
  CHECK(v.lhs == 0.5);
  CHECK(v.terms == std::array<double, 5>{1, 0.5, 0, 1, 0.5});
  CHECK(v.rhs == 1.0);
  CHECK(v.holds);
  CHECK(r25_at(t, make_metric_from_norm(make_euclidean_norm(1)), vec({1}), vec({0})).holds);
}

TEST_CASE("antipodal map ties at (1,-1) under all four conditions") {
  const auto t = builtin_map("negation", 1);
  const auto x = vec({1}), y = vec({-1});
  const auto ns = ns25_at(t, make_sum_abs_snorm(1), x, y);
  CHECK(ns.lhs == 4.0);
  CHECK(ns.terms == std::array<double, 5>{4, 4, 4, 0, 0});
  CHECK(!ns.holds);
  CHECK(!s25_at(t, smetric_from_snorm(make_sum_abs_snorm(1)), x, y).holds);
  const auto nr = nr25_at(t, make_euclidean_norm(1), x, y);
  CHECK(nr.lhs == 2.0);
  CHECK(nr.rhs == 2.0);
  CHECK(!nr.holds);
  CHECK(!r25_at(t, make_metric_from_norm(make_euclidean_norm(1)), x, y).holds);
}

TEST_CASE("identity map: displacement equals the first reference term") {
  // Tx - Ty = x - y, so lhs == terms[0] and the strict inequality fails.
  const auto t = builtin_map("identity", 2);
  const auto v = ns25_at(t, make_sum_abs_snorm(2), vec({0.5, 0}), vec({0, -0.25}));
  CHECK(v.lhs > 0.0);
  CHECK(v.lhs == v.terms[0]);
  CHECK(v.terms[1] == 0.0);
  CHECK(v.terms[2] == 0.0);
  CHECK(!v.holds);
}

TEST_CASE("condition preconditions") {
  const auto t = builtin_map("half", 1);
  const auto s = make_sum_abs_snorm(1);
  CHECK_THROWS_AS(ns25_at(t, s, vec({0.5}), vec({0.5})), ExcludedPair);
  CHECK_THROWS_AS(ns25_at(t, s, vec({2}), vec({0.5})), OutOfDomain);
  CHECK_THROWS_AS(ns25_at(t, make_euclidean_norm(1), vec({1}), vec({0})), KindMismatch);
  CHECK_THROWS_AS(ns25_at(t, make_sum_abs_snorm(2), vec({1, 0}), vec({0, 0})), DimensionMismatch);
  CHECK_THROWS_AS(builtin_map("square", 1), UnknownId);
  CHECK(condition_from_string("ns25") == Condition::NS25);
  CHECK_THROWS_AS(condition_from_string("xyz"), UnknownId);
}

TEST_CASE("condition survey counts violations") {
  const auto half = builtin_map("half", 2);
  const auto r = survey_condition(Condition::NS25, half, make_sum_abs_snorm(2), domain_spec(half, 2000));
  CHECK(r.violations == 0);
  CHECK(r.pass_rate == 1.0);
  const auto id = builtin_map("identity", 1);
  const auto bad = survey_condition(Condition::NR25, id, make_euclidean_norm(1), domain_spec(id, 500));
  CHECK(bad.violations == 500);
  CHECK(bad.first_violation);
  SampleSpec outside = SampleSpec::cube(2, -2, 2, 10);
  CHECK_THROWS_AS(survey_condition(Condition::NS25, half, make_sum_abs_snorm(2), outside), OutOfDomain);
}

TEST_CASE("scale and generated-metric coherence on sampled pairs") {
  for (const auto& id : builtin_map_ids()) {
    const auto t = builtin_map(id, 2);
    const auto n = make_euclidean_norm(2);
    const auto s = snorm_from_norm(n);
    const auto m = smetric_from_snorm(s);
    PropertyDef def;
    def.id = "COHERENCE";
    def.num_points = 2;
    const auto spec = domain_spec(t, 500);
    for (std::size_t i = 0; i < spec.count; ++i) {
      const auto smp = draw_sample(def, spec, i);
      const auto ns = ns25_at(t, s, smp.points[0], smp.points[1]);
      const auto nr = nr25_at(t, n, smp.points[0], smp.points[1]);
      const auto sm = s25_at(t, m, smp.points[0], smp.points[1]);
      CHECK(std::abs(ns.lhs - 2 * nr.lhs) <= 1e-12 * std::max(1.0, ns.lhs));
      for (std::size_t k = 0; k < 5; ++k) {
        CHECK(std::abs(ns.terms[k] - 2 * nr.terms[k]) <= 1e-12 * std::max(1.0, ns.terms[k]));
        CHECK(sm.terms[k] == ns.terms[k]);
      }
      CHECK(sm.lhs == ns.lhs);
    }
  }
}

TEST_CASE("implication checks pass on the map corpus") {
  for (const auto& id : builtin_map_ids()) {
    for (std::size_t d : {1u, 2u}) {
      const auto t = builtin_map(id, d);
      const auto r7 = check_prop7(t, make_sum_abs_snorm(d), domain_spec(t, 1000));
      const auto r7b = check_prop7(t, make_example6_snorm(d), domain_spec(t, 1000));
      const auto r8 = check_prop8(t, make_euclidean_norm(d), domain_spec(t, 1000));
      INFO(id << " d=" << d);
      CHECK(r7.passed());
      CHECK(r7b.passed());
      CHECK(r8.passed());
      CHECK(r7.property_id == "NS25_IMPLIES_S25");
      CHECK(r8.property_id == "NR25_IMPLIES_NS25");
    }
  }
  const auto id = builtin_map("identity", 1);
  CHECK(check_prop8(id, make_euclidean_norm(1), domain_spec(id, 100)).applicable_samples == 0);
}

TEST_CASE("fixed point of x/2 is the origin, found exactly") {
  const auto r = find_fixed_point(builtin_map("half", 2), make_sum_abs_snorm(2), 1e-6);
  CHECK(r.point == vec({0, 0}));
  CHECK(r.residual == 0.0);
  CHECK(r.uniqueness.unique);
  CHECK(r.uniqueness.basins.size() == 1);
  CHECK(r.evaluations > 0);
}

TEST_CASE("fixed point of (x+0.5)/2 is 0.5") {
  const auto r = find_fixed_point(builtin_map("shifted_half", 1), make_sum_abs_snorm(1), 1e-9);
  CHECK(r.point(0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.uniqueness.unique);
}

TEST_CASE("fixed point of cos matches plain iteration") {
  double x = 0.5;
  for (int i = 0; i < 1000; ++i) x = std::cos(x);
  const auto t = builtin_map("cosine", 1);
  const auto s = make_sum_abs_snorm(1);
  const auto r = find_fixed_point(t, s, 1e-6);
  CHECK(std::abs(r.point(0) - x) <= 1e-6);
  CHECK(std::abs(r.point(0) - 0.7390851) <= 1e-6);
  CHECK(fixed_point_residual(t, s, r.point) <= 1e-6);
  CHECK(r.uniqueness.unique);
}

TEST_CASE("identity has many fixed points") {
  const auto r = find_fixed_point(builtin_map("identity", 1), make_sum_abs_snorm(1), 1e-6);
  CHECK(r.residual == 0.0);
  CHECK(!r.uniqueness.unique);
  CHECK(r.uniqueness.basins.size() > 1);
}

TEST_CASE("grid refinement finds a repelling fixed point") {
  // T(x) = 1 - x^2 has a repelling fixed point at (sqrt(5) - 1) / 2; iteration
  // falls into the 2-cycle {0, 1}.
  SelfMap t{[](const Vector& x) -> Vector { return (1.0 - x.array().square()).matrix(); }, vec({0}), vec({1}),
            "one_minus_square"};
  const auto r = find_fixed_point(t, make_sum_abs_snorm(1), 1e-4);
  CHECK(std::abs(r.point(0) - (std::sqrt(5.0) - 1) / 2) <= 1e-4);
  CHECK(r.method == "refinement");
}

TEST_CASE("fixed-point search failure modes") {
  const auto s = make_sum_abs_snorm(1);
  try {
    find_fixed_point(builtin_map("cosine", 1), s, 1e-12, 5);
    FAIL("expected NoConvergence");
  } catch (const NoConvergence& e) {
    CHECK(e.residual() > 1e-12);
    CHECK(e.best().size() == 1);
  }
  SelfMap grow{[](const Vector& x) -> Vector { return 2.0 * x; }, vec({-1}), vec({1}), "grow"};
  CHECK_THROWS_AS(find_fixed_point(grow, s, 1e-6), NotASelfMap);
  CHECK_THROWS_AS(find_fixed_point(builtin_map("half", 1), s, 0.0), InvalidArgument);
}

TEST_CASE("residual landscape covers the grid") {
  const auto pts = residual_landscape(builtin_map("half", 2), make_sum_abs_snorm(2), 5);
  CHECK(pts.size() == 25);
  CHECK_THROWS_AS(residual_landscape(builtin_map("half", 3), make_sum_abs_snorm(3), 5), InvalidDimension);
}
