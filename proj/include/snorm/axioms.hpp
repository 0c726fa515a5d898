#ifndef SNORM_AXIOMS_HPP
#define SNORM_AXIOMS_HPP

// Sampling-based falsifiers for the norm, metric, S-norm, S-metric and G-norm
// axiom systems, plus necessary-condition tests for "generated by" claims.
//
// Every check first evaluates a short list of canned inputs (zero and unit
// vectors, and the classic counterexamples (1,5,0), (1,1,0) and lambda = 2),
// then draws spec.count uniform samples from the spec box. A FAIL carries a
// witness that violates the property when replayed; a PASS only says that no
// violation was found.

#include <string_view>
#include <vector>

#include "snorm/sampling.hpp"
#include "snorm/structure.hpp"

namespace snorm {

/// N1..N4 for a NORM.
std::vector<CheckReport> check_norm(const Structure& n, const SampleSpec& spec,
                                    double tol = kDefaultTolerance);

/// M1 (identity of indiscernibles), M2 (symmetry), M3 (triangle) for a METRIC.
std::vector<CheckReport> check_metric(const Structure& d, const SampleSpec& spec,
                                      double tol = kDefaultTolerance);

/// NS1..NS3 for an SNORM. NS3 uses the rotated pairing
/// ||x+x',y+y',z+z'|| <= ||0,x,z'|| + ||0,y,x'|| + ||0,z,y'|| verbatim.
std::vector<CheckReport> check_snorm(const Structure& s, const SampleSpec& spec,
                                     double tol = kDefaultTolerance);

/// S1, S2 for an SMETRIC.
std::vector<CheckReport> check_smetric(const Structure& m, const SampleSpec& spec,
                                       double tol = kDefaultTolerance);

/// NG1..NG5 for a GNORM or SNORM; NG2 compares all six permutations.
std::vector<CheckReport> check_gnorm(const Structure& g, const SampleSpec& spec,
                                     double tol = kDefaultTolerance);

/// ||0,x-y,y-x|| == ||0,y-x,x-y||.
CheckReport check_lemma3_symmetry(const Structure& s, const SampleSpec& spec,
                                  double tol = kDefaultTolerance);

/// Necessary condition for an S-norm generated by a norm:
/// ||x,y,z|| == ||x,0,0|| + ||0,y,0|| + ||0,0,z||. FAIL proves the S-norm is
/// not norm-generated; PASS is inconclusive. The witness records the
/// observations "xyz", "x00", "0y0", "00z" and "gap" (sum minus xyz).
CheckReport falsify_norm_generated(const Structure& s, const SampleSpec& spec,
                                   double tol = kDefaultTolerance);

/// Necessary conditions for an S-metric generated by an S-norm: homogeneity
/// S(lx,ly,lz) == |l| S(x,y,z) with |l| not in {0,1}, and translation
/// invariance S(x+a,y+a,z+a) == S(x,y,z). FAIL proves the S-metric is not
/// S-norm-generated; PASS is inconclusive. The witness records "observed"
/// and "required" for homogeneity and "translated" and "original".
CheckReport falsify_snorm_generated(const Structure& m, const SampleSpec& spec,
                                    double tol = kDefaultTolerance);

/// Checks by kind: check_norm, check_metric, check_snorm (plus the pair
/// symmetry), check_smetric or check_gnorm.
std::vector<CheckReport> check_axioms(const Structure& s, const SampleSpec& spec,
                                      double tol = kDefaultTolerance);

/// The property behind a report id, bound to `s`. Throws UnknownId.
PropertyDef axiom_property(const Structure& s, std::string_view property_id,
                           double tol = kDefaultTolerance);

/// Re-evaluates a FAIL report's property at its witness.
Outcome replay(const Structure& s, const CheckReport& report, double tol = kDefaultTolerance);

}  // namespace snorm

#endif  // SNORM_AXIOMS_HPP
