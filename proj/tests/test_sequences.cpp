#include <doctest.h>

#include "snorm/error.hpp"
#include "snorm/sequences.hpp"

using namespace snorm;

TEST_CASE("1/n converges to 0 from index 2001 at eps 1e-3") {
  // Tail value is 2/n, which is below 1e-3 exactly when n > 2000.
  const auto seq = builtin_sequence("inv_n", 10000, 1e-3);
  const auto r = check_convergence(seq.spec, vec({0}), make_sum_abs_snorm(1));
  REQUIRE(r.verdict == TailVerdict::Holds);
  CHECK(*r.first_index == 2001);
  CHECK(r.max_tail == doctest::Approx(2.0 / 5000));
}

TEST_CASE("a tail shorter than half the horizon is inconclusive") {
  const auto seq = builtin_sequence("inv_n", 3000, 1e-3);
  const auto r = check_convergence(seq.spec, vec({0}), make_sum_abs_snorm(1));
  CHECK(r.verdict == TailVerdict::Inconclusive);
  CHECK(!r.first_index);
}

TEST_CASE("wrong limits and divergent sequences are inconclusive") {
  const auto s = make_sum_abs_snorm(1);
  CHECK(check_convergence(builtin_sequence("inv_n", 10000, 1e-3).spec, vec({0.1}), s).verdict ==
        TailVerdict::Inconclusive);
  CHECK(check_cauchy(builtin_sequence("alternating", 10000, 1e-3).spec, s).verdict == TailVerdict::Inconclusive);
  CHECK(check_cauchy(builtin_sequence("linear", 10000, 1e-3).spec, s).verdict == TailVerdict::Inconclusive);
}

TEST_CASE("Cauchy verdicts for convergent sequences") {
  const auto s = make_sum_abs_snorm(1);
  const auto inv = check_cauchy(builtin_sequence("inv_n", 10000, 1e-3).spec, s);
  REQUIRE(inv.verdict == TailVerdict::Holds);
  CHECK(*inv.first_index <= 5000);
  const auto geo = check_cauchy(builtin_sequence("geometric_half", 10000, 1e-3).spec, s);
  REQUIRE(geo.verdict == TailVerdict::Holds);
  // Largest triple value from n0 on is 2 (x_n0 - x_N) < 2^(1-n0).
  CHECK(*geo.first_index == 11);
  const auto spiral = check_cauchy(builtin_sequence("spiral", 10000, 1e-3).spec, make_sum_abs_snorm(2));
  CHECK(spiral.verdict == TailVerdict::Holds);
}

TEST_CASE("1/n on (0,1) is Cauchy but its limit leaves the space") {
  const auto seq = builtin_sequence("inv_n", 10000, 1e-3);
  const auto r = classify_completeness_witness(seq.spec, make_sum_abs_snorm(1));
  CHECK(r.cauchy.verdict == TailVerdict::Holds);
  CHECK(r.candidate(0) == 0.0);
  CHECK(!r.in_domain);
  CHECK(r.convergence_to_candidate.verdict == TailVerdict::Holds);

  const auto closed = classify_completeness_witness(builtin_sequence("inv_n_closed", 10000, 1e-3).spec,
                                                    make_sum_abs_snorm(1));
  CHECK(closed.in_domain);
}

TEST_CASE("constant sequence stays in its domain") {
  const auto r = classify_completeness_witness(builtin_sequence("constant", 100, 1e-3).spec, make_sum_abs_snorm(1));
  CHECK(r.cauchy.verdict == TailVerdict::Holds);
  CHECK(*r.cauchy.first_index == 1);
  CHECK(r.candidate(0) == 0.25);
  CHECK(r.in_domain);
}

TEST_CASE("sequence inputs are validated") {
  CHECK_THROWS_AS(builtin_sequence("nope", 10, 1e-3), UnknownId);
  auto seq = builtin_sequence("inv_n", 1, 1e-3).spec;
  CHECK_THROWS_AS(check_cauchy(seq, make_sum_abs_snorm(1)), InvalidArgument);
  seq.horizon = 10;
  seq.eps = 0.0;
  CHECK_THROWS_AS(check_cauchy(seq, make_sum_abs_snorm(1)), InvalidArgument);
  CHECK_THROWS_AS(check_cauchy(builtin_sequence("inv_n", 10, 1e-3).spec, make_sum_abs_snorm(2)), DimensionMismatch);
}
