#include "snorm/generators.hpp"

#include <utility>

#include "snorm/error.hpp"

namespace snorm {

namespace {

std::vector<std::string> extend(const Structure& s, const char* step) {
  auto prov = s.provenance();
  prov.emplace_back(step);
  return prov;
}

}  // namespace

Structure smetric_from_snorm(const Structure& s) {
  s.require_kind(Kind::SNorm, "smetric_from_snorm");
  return Structure::ternary(
      Kind::SMetric, s.dim(), "S[" + s.name() + "]",
      [s](const Vector& x, const Vector& y, const Vector& z) { return s(x - y, y - z, z - x); },
      extend(s, "smetric_from_snorm"));
}

Structure snorm_from_norm(const Structure& n) {
  n.require_kind(Kind::Norm, "snorm_from_norm");
  return Structure::ternary(
      Kind::SNorm, n.dim(), "additive[" + n.name() + "]",
      [n](const Vector& x, const Vector& y, const Vector& z) { return n(x) + n(y) + n(z); },
      extend(n, "snorm_from_norm"));
}

Structure norm_from_snorm(const Structure& s) {
  s.require_kind(Kind::SNorm, "norm_from_snorm");
  const Vector origin = Vector::Zero(static_cast<Eigen::Index>(s.dim()));
  return Structure::norm(
      s.dim(), "norm[" + s.name() + "]",
      [s, origin](const Vector& x) { return s(origin, x, origin) + s(origin, origin, x); },
      extend(s, "norm_from_snorm"));
}

Structure smetric_from_metric(const Structure& m) {
  m.require_kind(Kind::Metric, "smetric_from_metric");
  return Structure::ternary(
      Kind::SMetric, m.dim(), "S[" + m.name() + "]",
      [m](const Vector& x, const Vector& y, const Vector& z) { return m(x, y) + m(x, z) + m(y, z); },
      extend(m, "smetric_from_metric"));
}

NotAGNorm::NotAGNorm(CheckReport report)
    : Error("not a G-norm: " + report.property_id + " failed"), report_(std::move(report)) {}

Structure snorm_from_gnorm(const Structure& g, const SampleSpec& spec, double tol) {
  g.require_kind(Kind::GNorm, "snorm_from_gnorm");
  for (auto& report : check_gnorm(g, spec, tol)) {
    if (!report.passed()) throw NotAGNorm(std::move(report));
  }
  return g.relabel(Kind::SNorm, "snorm_from_gnorm");
}

}  // namespace snorm
