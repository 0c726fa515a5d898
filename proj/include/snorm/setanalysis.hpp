#ifndef SNORM_SETANALYSIS_HPP
#define SNORM_SETANALYSIS_HPP

// Diameter, radius and Chebyshev quantities of finite point sets, measured
// with the pair value ||0, x - y, y - x|| of an S-norm. Results describe the
// finite set only; a continuous set must be represented by a sample.

#include <cstddef>
#include <optional>
#include <vector>

#include "snorm/error.hpp"
#include "snorm/structure.hpp"

namespace snorm {

/// A nonempty finite list of finite points of one dimension.
class PointSet {
 public:
  explicit PointSet(std::vector<Vector> points);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_of(points_.front()); }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Vector>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Index of the first point bitwise equal to u.
  std::optional<std::size_t> find(const Vector& u) const;

 private:
  std::vector<Vector> points_;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

/// ||0, x - y, y - x||.
double pair_value(const Structure& s, const Vector& x, const Vector& y);

/// Maximum pair value over the set. A singleton has diameter ||0,0,0||.
double s_diameter(const PointSet& a, const Structure& s);

/// Maximum of ||0, u - x, x - u|| over x in the set; u may lie outside it.
double s_radius_at(const PointSet& a, const Vector& u, const Structure& s);

struct ChebyshevResult {
  double radius = 0.0;
  /// Indices attaining the minimum, ascending.
  std::vector<std::size_t> centre_indices;
  PointSet centre;
};

/// Minimum over u in the set of s_radius_at, and its argmin set (exact ties).
ChebyshevResult s_chebyshev(const PointSet& a, const Structure& s);

enum class Diametral { Diametral, NonDiametral };

/// DIAMETRAL iff the radius at u equals the diameter (to 1e-12 relative).
/// Throws MembershipError unless u is a member of the set.
Diametral classify_diametral(const PointSet& a, const Vector& u, const Structure& s);

struct NormalStructureWitness {
  /// The member with the smallest radius, when that radius is below the
  /// diameter (lowest index on ties).
  std::optional<std::size_t> index;
  std::optional<Vector> point;
  bool zero_diameter = false;
};

/// A non-diametral member of the set, if the diameter is positive and one
/// exists.
NormalStructureWitness normal_structure_witness(const PointSet& a, const Structure& s);

/// Everything above in one pass.
struct SetReport {
  double diameter = 0.0;
  double chebyshev_radius = 0.0;
  std::vector<std::size_t> centre_indices;
  std::vector<bool> diametral_flags;
  std::vector<double> radii;
  NormalStructureWitness witness;
};

SetReport analyze_set(const PointSet& a, const Structure& s);

}  // namespace snorm

#endif  // SNORM_SETANALYSIS_HPP
