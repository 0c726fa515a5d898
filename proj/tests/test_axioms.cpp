#include <doctest.h>

#include <cmath>

#include "snorm/axioms.hpp"
#include "snorm/catalog.hpp"
#include "snorm/generators.hpp"

using namespace snorm;

namespace {

const CheckReport& find(const std::vector<CheckReport>& reports, const std::string& id) {
  for (const auto& r : reports) {
    if (r.property_id == id) return r;
  }
  FAIL("missing report " << id);
  return reports.front();
}

void check_all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    INFO(r.property_id << ": " << r.summary());
    CHECK(r.passed());
    CHECK(r.worst_margin >= -1e-9);
  }
}

}  // namespace

TEST_CASE("S-norm axioms hold for sum_abs and example6") {
  for (std::size_t d : {1u, 2u, 3u}) {
    const auto spec = SampleSpec::cube(d, -10, 10, 2000, 7);
    check_all_pass(check_snorm(make_sum_abs_snorm(d), spec));
    check_all_pass(check_snorm(make_example6_snorm(d), spec));
  }
}

TEST_CASE("discrete S-metric satisfies S1 and S2") {
  check_all_pass(check_smetric(make_discrete_smetric(2), SampleSpec::cube(2, -10, 10, 2000)));
}

TEST_CASE("generated norms and metrics pass their axioms") {
  const auto spec = SampleSpec::cube(2, -10, 10, 2000);
  check_all_pass(check_norm(norm_from_snorm(make_sum_abs_snorm(2)), spec));
  check_all_pass(check_norm(norm_from_snorm(make_example6_snorm(2)), spec));
  check_all_pass(check_norm(make_euclidean_norm(2), spec));
  check_all_pass(check_metric(make_metric_from_norm(make_euclidean_norm(2)), spec));
  check_all_pass(check_gnorm(make_additive_gnorm(2), spec));
}

TEST_CASE("example6 is not a G-norm: NG5 fails at (1,5,0)") {
  const auto reports = check_gnorm(make_example6_snorm(1), SampleSpec::cube(1, -10, 10, 100));
  const auto& ng5 = find(reports, "NG5");
  REQUIRE(ng5.verdict == Verdict::Fail);
  REQUIRE(ng5.witness);
  const auto& w = *ng5.witness;
  CHECK(w.points[0](0) == 1.0);
  CHECK(w.points[1](0) == 5.0);
  CHECK(w.points[2](0) == 0.0);
  CHECK(w.value("xyz") == 24.0);
  CHECK(w.value("collapsed") == 30.0);
  CHECK(ng5.samples_used == 1);
  CHECK(replay(make_example6_snorm(1), ng5).violated);
}

TEST_CASE("example6 is not generated by a norm") {
  const auto r = falsify_norm_generated(make_example6_snorm(1), SampleSpec::cube(1, -10, 10, 100));
  REQUIRE(r.verdict == Verdict::Fail);
  const auto& w = *r.witness;
  CHECK(w.value("x00") == 5.0);
  CHECK(w.value("0y0") == 5.0);
  CHECK(w.value("xyz") == 6.0);
  CHECK(w.value("gap") == 4.0);
}

TEST_CASE("sum_abs passes the norm-decomposition test") {
  const auto r = falsify_norm_generated(make_sum_abs_snorm(2), SampleSpec::cube(2, -10, 10, 2000));
  CHECK(r.passed());
  CHECK(!r.witness);
}

TEST_CASE("discrete S-metric is not generated by an S-norm") {
  const auto r = falsify_snorm_generated(make_discrete_smetric(1), SampleSpec::cube(1, -10, 10, 100));
  REQUIRE(r.verdict == Verdict::Fail);
  const auto& w = *r.witness;
  REQUIRE(w.scalars.size() == 1);
  CHECK(w.scalars[0] == 2.0);
  CHECK(w.points[2](0) == 1.0);
  CHECK(w.value("observed") == 1.0);
  CHECK(w.value("required") == 2.0);
}

TEST_CASE("a squared norm breaks homogeneity and the witness replays") {
  const auto base = make_euclidean_norm(2);
  const auto bad = Structure::norm(2, "squared", [base](const Vector& x) { return std::pow(base(x), 2); });
  const auto reports = check_norm(bad, SampleSpec::cube(2, -10, 10, 500));
  const auto& n3 = find(reports, "N3");
  REQUIRE(n3.verdict == Verdict::Fail);
  CHECK(n3.worst_margin < -1e-9);
  CHECK(replay(bad, n3).violated);
}

TEST_CASE("an S-norm violating the rotated triangle inequality is caught") {
  // ||x,y,z|| = |x|: NS1 fails as well, but NS3 must fail on its own.
  const auto bad = Structure::ternary(Kind::SNorm, 1, "first_only",
                                      [](const Vector& x, const Vector&, const Vector&) { return x.norm(); });
  const auto reports = check_snorm(bad, SampleSpec::cube(1, -10, 10, 2000));
  CHECK(find(reports, "NS1").verdict == Verdict::Fail);
  const auto& ns3 = find(reports, "NS3");
  REQUIRE(ns3.verdict == Verdict::Fail);
  CHECK(replay(bad, ns3).violated);
}

TEST_CASE("reports are deterministic and independent of thread count") {
  const auto s = make_example6_snorm(3);
  auto spec = SampleSpec::cube(3, -10, 10, 3000, 99);
  const auto a = check_snorm(s, spec);
  spec.threads = 4;
  const auto b = check_snorm(s, spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].property_id == b[i].property_id);
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(a[i].worst_margin == b[i].worst_margin);
    CHECK(a[i].applicable_samples == b[i].applicable_samples);
  }
}

TEST_CASE("different seeds draw different samples") {
  PropertyDef p;
  p.id = "ANY";
  p.num_points = 1;
  const auto x = draw_sample(p, SampleSpec::cube(2, -1, 1, 10, 1), 0).points[0];
  const auto y = draw_sample(p, SampleSpec::cube(2, -1, 1, 10, 2), 0).points[0];
  CHECK(!exactly_equal(x, y));
  CHECK(exactly_equal(x, draw_sample(p, SampleSpec::cube(2, -1, 1, 10, 1), 0).points[0]));
}

TEST_CASE("axiom_property rejects unknown ids") {
  CHECK_THROWS_AS(axiom_property(make_sum_abs_snorm(1), "S9"), UnknownId);
}
