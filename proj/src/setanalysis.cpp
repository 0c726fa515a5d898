#include "snorm/setanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace snorm {

namespace {

constexpr double kDiametralTolerance = 1e-12;

bool same_value(double a, double b) {
  return std::abs(a - b) <= kDiametralTolerance * std::max({std::abs(a), std::abs(b), 1.0});
}

std::vector<double> radii_of(const PointSet& a, const Structure& s) {
  std::vector<double> radii;
  radii.reserve(a.size());
  for (const auto& u : a) radii.push_back(s_radius_at(a, u, s));
  return radii;
}

}  // namespace

PointSet::PointSet(std::vector<Vector> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("point set must be nonempty");
  const std::size_t d = dim_of(points_.front());
  if (d == 0) throw InvalidDimension("points need dimension >= 1");
  for (const auto& p : points_) require_point(p, d, "point set member");
}

std::optional<std::size_t> PointSet::find(const Vector& u) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (exactly_equal(points_[i], u)) return i;
  }
  return std::nullopt;
}

double pair_value(const Structure& s, const Vector& x, const Vector& y) {
  s.require_kind(Kind::SNorm, "pair_value");
  return s(Vector::Zero(x.size()), x - y, y - x);
}

double s_diameter(const PointSet& a, const Structure& s) {
  s.require_kind(Kind::SNorm, "s_diameter");
  double best = pair_value(s, a[0], a[0]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) best = std::max(best, pair_value(s, a[i], a[j]));
  }
  return best;
}

double s_radius_at(const PointSet& a, const Vector& u, const Structure& s) {
  s.require_kind(Kind::SNorm, "s_radius_at");
  require_point(u, a.dim(), "u");
  double best = pair_value(s, u, a[0]);
  for (std::size_t i = 1; i < a.size(); ++i) best = std::max(best, pair_value(s, u, a[i]));
  return best;
}

ChebyshevResult s_chebyshev(const PointSet& a, const Structure& s) {
  const auto radii = radii_of(a, s);
  const double radius = *std::min_element(radii.begin(), radii.end());
  std::vector<std::size_t> idx;
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] == radius) {
      idx.push_back(i);
      pts.push_back(a[i]);
    }
  }
  return {radius, std::move(idx), PointSet(std::move(pts))};
}

Diametral classify_diametral(const PointSet& a, const Vector& u, const Structure& s) {
  require_point(u, a.dim(), "u");
  if (!a.find(u)) throw MembershipError("classify_diametral: u is not a member of the set");
  return same_value(s_radius_at(a, u, s), s_diameter(a, s)) ? Diametral::Diametral
                                                             : Diametral::NonDiametral;
}

NormalStructureWitness normal_structure_witness(const PointSet& a, const Structure& s) {
  NormalStructureWitness w;
  const double diameter = s_diameter(a, s);
  if (!(diameter > 0.0)) {
    w.zero_diameter = true;
    return w;
  }
  const auto radii = radii_of(a, s);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (same_value(radii[i], diameter)) continue;
    if (!w.index || radii[i] < radii[*w.index]) w.index = i;
  }
  if (w.index) w.point = a[*w.index];
  return w;
}

SetReport analyze_set(const PointSet& a, const Structure& s) {
  SetReport r;
  r.diameter = s_diameter(a, s);
  r.radii = radii_of(a, s);
  const auto cheb = s_chebyshev(a, s);
  r.chebyshev_radius = cheb.radius;
  r.centre_indices = cheb.centre_indices;
  r.diametral_flags.reserve(a.size());
  for (double ru : r.radii) r.diametral_flags.push_back(same_value(ru, r.diameter));
  r.witness = normal_structure_witness(a, s);
  return r;
}

}  // namespace snorm
