#ifndef SNORM_GENERATORS_HPP
#define SNORM_GENERATORS_HPP

// Constructions that turn one structure into another. Each output carries the
// input's provenance plus one step label naming the construction.
//
// The constructions are not mutually inverse: norm_from_snorm(snorm_from_norm(n))
// evaluates to 2 * n.

#include "snorm/axioms.hpp"
#include "snorm/error.hpp"
#include "snorm/sampling.hpp"
#include "snorm/structure.hpp"

namespace snorm {

/// S(x,y,z) = ||x-y, y-z, z-x||.
Structure smetric_from_snorm(const Structure& s);

/// ||x,y,z|| = ||x|| + ||y|| + ||z||.
Structure snorm_from_norm(const Structure& n);

/// ||x|| = ||0,x,0|| + ||0,0,x||.
Structure norm_from_snorm(const Structure& s);

/// S(x,y,z) = d(x,y) + d(x,z) + d(y,z).
Structure smetric_from_metric(const Structure& m);

/// Raised by snorm_from_gnorm when the input fails a sampled G-norm axiom.
class NotAGNorm : public Error {
 public:
  explicit NotAGNorm(CheckReport report);
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// Every G-norm is an S-norm: wraps the same evaluator as an SNORM after a
/// sampled NG1..NG5 check over `spec`.
Structure snorm_from_gnorm(const Structure& g, const SampleSpec& spec,
                           double tol = kDefaultTolerance);

}  // namespace snorm

#endif  // SNORM_GENERATORS_HPP
