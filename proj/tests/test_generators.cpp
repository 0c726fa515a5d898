#include <doctest.h>

#include <cmath>

#include "snorm/catalog.hpp"
#include "snorm/generators.hpp"

using namespace snorm;

namespace {

std::vector<Vector> sample_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  PropertyDef p;
  p.id = "GENERATOR_TEST";
  p.num_points = 1;
  const auto spec = SampleSpec::cube(dim, -10, 10, count, seed);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw_sample(p, spec, i).points[0]);
  return out;
}

}  // namespace

TEST_CASE("generated S-metric evaluates the S-norm on the difference triple") {
  const auto s = make_example6_snorm(2);
  const auto m = smetric_from_snorm(s);
  CHECK(m.kind() == Kind::SMetric);
  const auto pts = sample_points(2, 300, 3);
  for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
    const auto &x = pts[i], &y = pts[i + 1], &z = pts[i + 2];
    CHECK(m(x, y, z) == s(x - y, y - z, z - x));
  }
  CHECK(m(pts[0], pts[0], pts[0]) == 0.0);
}

TEST_CASE("S-norm generated by the Euclidean norm is sum_abs") {
  const auto s = snorm_from_norm(make_euclidean_norm(3));
  const auto ref = make_sum_abs_snorm(3);
  const auto pts = sample_points(3, 300, 4);
  for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
    CHECK(s(pts[i], pts[i + 1], pts[i + 2]) == doctest::Approx(ref(pts[i], pts[i + 1], pts[i + 2])).epsilon(1e-15));
  }
}

TEST_CASE("norm -> S-norm -> norm doubles the norm") {
  const auto n = make_euclidean_norm(2);
  const auto back = norm_from_snorm(snorm_from_norm(n));
  for (const auto& x : sample_points(2, 1000, 5)) {
    CHECK(back(x) == doctest::Approx(2.0 * n(x)).epsilon(1e-12));
  }
}

TEST_CASE("generated norm of example6 has the hand value 10|x|") {
  // ||0,x,0|| + ||0,0,x|| = (2+1+2)|x| + (2+2+1)|x|
  const auto n = norm_from_snorm(make_example6_snorm(1));
  CHECK(n(vec({1})) == 10.0);
  CHECK(n(vec({-3})) == 30.0);
}

TEST_CASE("S-metric from a metric sums the three pairwise distances") {
  const auto d = make_metric_from_norm(make_euclidean_norm(2));
  const auto m = smetric_from_metric(d);
  const auto x = vec({0, 0}), y = vec({3, 4}), z = vec({0, 4});
  CHECK(m(x, y, z) == 5.0 + 4.0 + 3.0);
}

TEST_CASE("generators check their input kinds") {
  CHECK_THROWS_AS(smetric_from_snorm(make_euclidean_norm(1)), KindMismatch);
  CHECK_THROWS_AS(snorm_from_norm(make_sum_abs_snorm(1)), KindMismatch);
  CHECK_THROWS_AS(norm_from_snorm(make_discrete_smetric(1)), KindMismatch);
  CHECK_THROWS_AS(smetric_from_metric(make_euclidean_norm(1)), KindMismatch);
}

TEST_CASE("a G-norm converts to an S-norm after passing the G-norm axioms") {
  const auto s = snorm_from_gnorm(make_additive_gnorm(2), SampleSpec::cube(2, -10, 10, 1000));
  CHECK(s.kind() == Kind::SNorm);
  CHECK(s.provenance().back() == "snorm_from_gnorm");
  CHECK(s(vec({3, 4}), vec({0, 0}), vec({0, 1})) == 6.0);
}

TEST_CASE("example6 posing as a G-norm is rejected with the NG5 report") {
  const auto fake = make_example6_snorm(1).relabel(Kind::GNorm, "claimed");
  try {
    snorm_from_gnorm(fake, SampleSpec::cube(1, -10, 10, 100));
    FAIL("expected NotAGNorm");
  } catch (const NotAGNorm& e) {
    CHECK(e.report().property_id == "NG5");
    CHECK(e.report().witness->value("xyz") == 24.0);
  }
}

TEST_CASE("provenance names each construction in order") {
  const auto m = smetric_from_snorm(snorm_from_norm(make_euclidean_norm(1)));
  const auto& p = m.provenance();
  REQUIRE(p.size() == 3);
  CHECK(p[0].rfind("make_euclidean_norm", 0) == 0);
  CHECK(p[1] == "snorm_from_norm");
  CHECK(p[2] == "smetric_from_snorm");
}
