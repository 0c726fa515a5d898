#include "snorm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace snorm {

namespace {

constexpr double kRayTolerance = 1e-12;
// A ray that has not reached the level after this many doublings of the
// initial step is reported as unbounded.
constexpr int kMaxDoublings = 60;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void BallSpec::validate(std::size_t dim) const {
  require_point(center, dim, "ball center");
  require_point(anchor1, dim, "ball anchor a1");
  require_point(anchor2, dim, "ball anchor a2");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgument("ball radius must be positive and finite");
  }
}

BallSpec fig1a_ball() { return {vec({1.0, 1.0}), vec({0.0, 0.0}), vec({-1.0, -1.0}), 5.0, false}; }

BallSpec fig1b_ball() { return {vec({1.0, 1.0}), vec({0.0, 0.0}), vec({-1.0, -1.0}), 20.0, false}; }

double ball_value(const Structure& s, const BallSpec& b, const Vector& y) {
  s.require_kind(Kind::SNorm, "ball_value");
  b.validate(s.dim());
  require_point(y, s.dim(), "y");
  return s(y - b.center, y - b.anchor1, y - b.anchor2);
}

bool ball_contains(const Structure& s, const BallSpec& b, const Vector& y) {
  const double v = ball_value(s, b, y);
  return b.closed ? v <= b.radius : v < b.radius;
}

Polyline trace_boundary_2d(const Structure& s, const BallSpec& b, std::size_t resolution) {
  s.require_kind(Kind::SNorm, "trace_boundary_2d");
  if (s.dim() != 2) throw InvalidDimension("boundary tracing needs a 2-D S-norm");
  if (resolution < 8) throw InvalidArgument("trace resolution must be at least 8");
  b.validate(2);

  const Vector c = (b.center + b.anchor1 + b.anchor2) / 3.0;
  const double r = b.radius;
  auto value = [&](const Vector& y) { return s(y - b.center, y - b.anchor1, y - b.anchor2); };

  if (!(value(c) < r)) {
    throw TraceError("centroid of x0, a1, a2 lies outside the ball; nothing to trace", 0.0);
  }
  const double spread = std::max({(b.center - c).norm(), (b.anchor1 - c).norm(),
                                  (b.anchor2 - c).norm(), 1e-3 * r});

  Polyline poly;
  poly.reserve(resolution);
  for (std::size_t k = 0; k < resolution; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(resolution);
    const Vector dir = vec({std::cos(angle), std::sin(angle)});
    auto along = [&](double t) { return value(c + t * dir); };

    double lo = 0.0;
    double hi = spread;
    int doublings = 0;
    while (!(along(hi) >= r)) {
      lo = hi;
      hi *= 2.0;
      if (++doublings > kMaxDoublings) {
        throw TraceError("ray at angle " + fmt(angle) + " rad never reaches the level set", angle);
      }
    }
    // along(lo) < r <= along(hi)
    while (hi - lo > kRayTolerance * std::max(1.0, hi)) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (along(mid) < r ? lo : hi) = mid;
    }
    const Vector p = c + (0.5 * (lo + hi)) * dir;
    poly.push_back({angle, Eigen::Vector2d(p(0), p(1))});
  }
  return poly;
}

bool inside_polyline(const Polyline& poly, const Eigen::Vector2d& p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto& a = poly[i].point;
    const auto& b = poly[j].point;
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_cross = (b.x() - a.x()) * (p.y() - a.y()) / (b.y() - a.y()) + a.x();
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

void write_boundary_csv(std::ostream& out, const Polyline& poly) {
  out << "angle_rad,x,y\n";
  for (const auto& v : poly) {
    out << fmt(v.angle) << ',' << fmt(v.point.x()) << ',' << fmt(v.point.y()) << '\n';
  }
}

void write_boundary_svg(std::ostream& out, const Polyline& poly) {
  if (poly.empty()) throw InvalidArgument("cannot render an empty polyline");
  Eigen::Vector2d lo(poly.front().point.x(), -poly.front().point.y());
  Eigen::Vector2d hi = lo;
  for (const auto& v : poly) {
    const Eigen::Vector2d q(v.point.x(), -v.point.y());
    lo = lo.cwiseMin(q);
    hi = hi.cwiseMax(q);
  }
  const Eigen::Vector2d size = hi - lo;
  const Eigen::Vector2d margin = 0.05 * size;
  const Eigen::Vector2d origin = lo - margin;
  const Eigen::Vector2d extent = size + 2.0 * margin;
  const double stroke = 0.005 * std::max(extent.x(), extent.y());

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(origin.x()) << ' '
      << fmt(origin.y()) << ' ' << fmt(extent.x()) << ' ' << fmt(extent.y()) << "\">\n";
  out << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(stroke) << "\" d=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out << (i == 0 ? "M" : " L") << fmt(poly[i].point.x()) << ',' << fmt(-poly[i].point.y());
  }
  out << " Z\"/>\n</svg>\n";
}

}  // namespace snorm
