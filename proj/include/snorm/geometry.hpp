#ifndef SNORM_GEOMETRY_HPP
#define SNORM_GEOMETRY_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "snorm/error.hpp"
#include "snorm/structure.hpp"

namespace snorm {

/// The ball {y : ||y - x0, y - a1, y - a2|| < r} (or <= r when closed).
struct BallSpec {
  Vector center;
  Vector anchor1;
  Vector anchor2;
  double radius = 1.0;
  bool closed = false;

  /// Throws unless all points share `dim`, are finite, and radius > 0.
  void validate(std::size_t dim) const;
};

/// Figure presets in R^2: x0 = (1,1), a1 = (0,0), a2 = (-1,-1); r = 5 for the
/// sum_abs 3-ellipse and r = 20 for the example6 S-norm.
BallSpec fig1a_ball();
BallSpec fig1b_ball();

/// ||y - x0, y - a1, y - a2||.
double ball_value(const Structure& s, const BallSpec& b, const Vector& y);

/// Exact comparison against the radius: < for open balls, <= for closed.
bool ball_contains(const Structure& s, const BallSpec& b, const Vector& y);

struct BoundaryVertex {
  double angle = 0.0;
  Eigen::Vector2d point;
};

/// Vertices in ray order; the polyline closes from the last back to the first.
using Polyline = std::vector<BoundaryVertex>;

class TraceError : public Error {
 public:
  TraceError(const std::string& what, double angle) : Error(what), angle_(angle) {}
  double angle() const { return angle_; }

 private:
  double angle_;
};

/// Radial trace of the level set ball_value == r in R^2. Casts `resolution`
/// equally spaced rays from the centroid of {x0, a1, a2}, brackets the
/// crossing by doubling, and bisects it to 1e-12 (relative) along the ray. Throws
/// TraceError when the centroid is not inside the ball or a ray does not
/// reach the level within a bounded distance.
Polyline trace_boundary_2d(const Structure& s, const BallSpec& b, std::size_t resolution);

/// Even-odd point-in-polygon test.
bool inside_polyline(const Polyline& poly, const Eigen::Vector2d& p);

/// CSV with header "angle_rad,x,y", one row per vertex.
void write_boundary_csv(std::ostream& out, const Polyline& poly);

/// A single stroke-only closed path. The viewBox is the bounding box plus a
/// 5% margin; y is negated so the picture keeps the mathematical orientation.
void write_boundary_svg(std::ostream& out, const Polyline& poly);

}  // namespace snorm

#endif  // SNORM_GEOMETRY_HPP
