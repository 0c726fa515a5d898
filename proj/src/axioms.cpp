#include "snorm/axioms.hpp"

#include <array>
#include <cmath>
#include <string>

#include "snorm/error.hpp"

namespace snorm {

namespace {

Vector zero(std::size_t dim) { return Vector::Zero(static_cast<Eigen::Index>(dim)); }

Vector unit(std::size_t dim, double scale = 1.0) {
  Vector e = zero(dim);
  e(0) = scale;
  return e;
}

bool is_zero(const Vector& v) { return (v.array() == 0.0).all(); }

Outcome tagged(Outcome out, const char* prefix) {
  for (auto& [key, v] : out.values) key = std::string(prefix) + "." + key;
  return out;
}

// --- norm -------------------------------------------------------------------

PropertyDef n1(const Structure& n, double tol) {
  const auto d = n.dim();
  return {"N1", 1, 0, false, nullptr,
          [n, tol](const Sample& s) { return le_outcome(0.0, n(s.points[0]), tol); },
          {{{zero(d)}, {}}, {{unit(d)}, {}}, {{unit(d, -1.0)}, {}}}};
}

PropertyDef n2(const Structure& n, double tol) {
  const auto d = n.dim();
  return {"N2", 1, 0, false, nullptr,
          [n, tol](const Sample& s) {
            const Vector& x = s.points[0];
            return is_zero(x) ? zero_outcome(n(x)) : positive_outcome(n(x), tol);
          },
          {{{zero(d)}, {}}, {{unit(d)}, {}}}};
}

PropertyDef n3(const Structure& n, double tol) {
  const auto d = n.dim();
  return {"N3", 1, 1, false, nullptr,
          [n, tol](const Sample& s) {
            const Vector& x = s.points[0];
            const double l = s.scalars[0];
            return eq_outcome(n(l * x), std::abs(l) * n(x), tol);
          },
          {{{unit(d)}, {2.0}}, {{unit(d)}, {-1.0}}, {{unit(d)}, {0.0}}}};
}

PropertyDef n4(const Structure& n, double tol) {
  const auto d = n.dim();
  return {"N4", 2, 0, false, nullptr,
          [n, tol](const Sample& s) {
            const Vector& x = s.points[0];
            const Vector& y = s.points[1];
            return le_outcome(n(x + y), n(x) + n(y), tol);
          },
          {{{unit(d), unit(d)}, {}}, {{unit(d), unit(d, -1.0)}, {}}}};
}

// --- metric -----------------------------------------------------------------

PropertyDef m1(const Structure& m, double tol) {
  const auto d = m.dim();
  return {"M1", 2, 0, false, nullptr,
          [m, tol](const Sample& s) {
            const Vector& x = s.points[0];
            const Vector& y = s.points[1];
            Outcome out = tagged(zero_outcome(m(x, x)), "xx");
            out.merge(tagged(le_outcome(0.0, m(x, y), tol), "xy"));
            if (!exactly_equal(x, y)) out.merge(tagged(positive_outcome(m(x, y), tol), "xy"));
            return out;
          },
          {{{zero(d), zero(d)}, {}}, {{zero(d), unit(d)}, {}}}};
}

PropertyDef m2(const Structure& m, double tol) {
  const auto d = m.dim();
  return {"M2", 2, 0, false, nullptr,
          [m, tol](const Sample& s) {
            return eq_outcome(m(s.points[0], s.points[1]), m(s.points[1], s.points[0]), tol);
          },
          {{{zero(d), unit(d)}, {}}}};
}

PropertyDef m3(const Structure& m, double tol) {
  const auto d = m.dim();
  return {"M3", 3, 0, false, nullptr,
          [m, tol](const Sample& s) {
            const Vector& x = s.points[0];
            const Vector& y = s.points[1];
            const Vector& z = s.points[2];
            return le_outcome(m(x, z), m(x, y) + m(y, z), tol);
          },
          {{{zero(d), unit(d), unit(d, 2.0)}, {}}}};
}

// --- three-argument norms ---------------------------------------------------

// NS1 and NG1 share one definition: nonnegativity everywhere, exact zero at
// the zero triple, strict positivity elsewhere.
PropertyDef positivity(const Structure& s, const char* id, double tol) {
  const auto d = s.dim();
  const Vector o = zero(d);
  const Vector e = unit(d);
  return {id, 3, 0, false, nullptr,
          [s, tol](const Sample& smp) {
            const Vector& x = smp.points[0];
            const Vector& y = smp.points[1];
            const Vector& z = smp.points[2];
            const double v = s(x, y, z);
            Outcome out = le_outcome(0.0, v, tol);
            if (is_zero(x) && is_zero(y) && is_zero(z)) {
              out.merge(zero_outcome(v));
            } else {
              out.merge(positive_outcome(v, tol));
            }
            return out;
          },
          {{{o, o, o}, {}}, {{e, o, o}, {}}, {{o, e, o}, {}}, {{o, o, e}, {}}}};
}

PropertyDef homogeneity(const Structure& s, const char* id, double tol) {
  const auto d = s.dim();
  const Vector e = unit(d);
  return {id, 3, 1, false, nullptr,
          [s, tol](const Sample& smp) {
            const Vector& x = smp.points[0];
            const Vector& y = smp.points[1];
            const Vector& z = smp.points[2];
            const double l = smp.scalars[0];
            return eq_outcome(s(l * x, l * y, l * z), std::abs(l) * s(x, y, z), tol);
          },
          {{{e, unit(d, 2.0), unit(d, -1.0)}, {2.0}},
           {{e, unit(d, 2.0), unit(d, -1.0)}, {-1.0}},
           {{e, unit(d, 2.0), unit(d, -1.0)}, {0.0}}}};
}

PropertyDef ns3(const Structure& s, double tol) {
  const auto d = s.dim();
  const Vector o = zero(d);
  const Vector e = unit(d);
  return {"NS3", 6, 0, false, nullptr,
          [s, tol](const Sample& smp) {
            const auto& p = smp.points;  // x, y, z, x', y', z'
            const double lhs = s(p[0] + p[3], p[1] + p[4], p[2] + p[5]);
            const Vector o = Vector::Zero(p[0].size());
            const double rhs = s(o, p[0], p[5]) + s(o, p[1], p[3]) + s(o, p[2], p[4]);
            return le_outcome(lhs, rhs, tol);
          },
          {{{e, o, o, e, o, o}, {}}, {{e, e, o, o, o, o}, {}}, {{o, o, o, e, e, e}, {}}}};
}

PropertyDef ng2(const Structure& g, double tol) {
  const auto d = g.dim();
  return {"NG2", 3, 0, false, nullptr,
          [g, tol](const Sample& smp) {
            const auto& p = smp.points;
            constexpr std::array<std::array<int, 3>, 6> perms{
                {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
            const double base = g(p[0], p[1], p[2]);
            Outcome out;
            out.slack = 0.0;
            for (const auto& q : perms) {
              const double v = g(p[q[0]], p[q[1]], p[q[2]]);
              const std::string tag = std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]);
              out.merge(tagged(eq_outcome(base, v, tol), tag.c_str()));
            }
            return out;
          },
          {{{unit(d), unit(d, 2.0), unit(d, 5.0)}, {}}}};
}

PropertyDef ng4(const Structure& g, double tol) {
  const auto d = g.dim();
  const Vector o = zero(d);
  const Vector e = unit(d);
  return {"NG4", 6, 0, false, nullptr,
          [g, tol](const Sample& smp) {
            const auto& p = smp.points;
            const double lhs = g(p[0] + p[3], p[1] + p[4], p[2] + p[5]);
            const double rhs = g(p[0], p[1], p[2]) + g(p[3], p[4], p[5]);
            return le_outcome(lhs, rhs, tol);
          },
          {{{e, o, o, e, o, o}, {}}, {{e, e, o, o, o, o}, {}}}};
}

PropertyDef ng5(const Structure& g, double tol) {
  const auto d = g.dim();
  return {"NG5", 3, 0, false, nullptr,
          [g, tol](const Sample& smp) {
            const auto& p = smp.points;
            const Vector o = Vector::Zero(p[0].size());
            // ||x,y,z|| >= ||x+y,0,z||, written as lhs <= rhs.
            const double collapsed = g(p[0] + p[1], o, p[2]);
            const double xyz = g(p[0], p[1], p[2]);
            Outcome out = le_outcome(collapsed, xyz, tol);
            out.values = {{"xyz", xyz}, {"collapsed", collapsed}};
            return out;
          },
          {{{unit(d), unit(d, 5.0), zero(d)}, {}}}};
}

// --- S-metric ---------------------------------------------------------------

PropertyDef s1(const Structure& m, double tol) {
  const auto d = m.dim();
  const Vector o = zero(d);
  const Vector e = unit(d);
  return {"S1", 3, 0, false, nullptr,
          [m, tol](const Sample& smp) {
            const Vector& x = smp.points[0];
            const Vector& y = smp.points[1];
            const Vector& z = smp.points[2];
            const double v = m(x, y, z);
            Outcome out = tagged(zero_outcome(m(x, x, x)), "xxx");
            out.merge(tagged(le_outcome(0.0, v, tol), "xyz"));
            if (exactly_equal(x, y) && exactly_equal(y, z)) {
              out.merge(tagged(zero_outcome(v), "xyz"));
            } else {
              out.merge(tagged(positive_outcome(v, tol), "xyz"));
            }
            return out;
          },
          {{{o, o, o}, {}}, {{o, e, e}, {}}, {{o, o, e}, {}}, {{e, o, o}, {}}}};
}

PropertyDef s2(const Structure& m, double tol) {
  const auto d = m.dim();
  const Vector o = zero(d);
  const Vector e = unit(d);
  return {"S2", 4, 0, false, nullptr,
          [m, tol](const Sample& smp) {
            const auto& p = smp.points;  // x, y, z, a
            const double lhs = m(p[0], p[1], p[2]);
            const double rhs = m(p[0], p[0], p[3]) + m(p[1], p[1], p[3]) + m(p[2], p[2], p[3]);
            return le_outcome(lhs, rhs, tol);
          },
          {{{o, e, unit(d, 2.0), o}, {}}}};
}

// --- generated-by falsifiers ------------------------------------------------

PropertyDef symmetric_pair(const Structure& s, double tol) {
  const auto d = s.dim();
  return {"PAIR_SYMMETRY", 2, 0, false, nullptr,
          [s, tol](const Sample& smp) {
            const Vector& x = smp.points[0];
            const Vector& y = smp.points[1];
            const Vector o = Vector::Zero(x.size());
            return eq_outcome(s(o, x - y, y - x), s(o, y - x, x - y), tol);
          },
          {{{unit(d), zero(d)}, {}}, {{unit(d), unit(d)}, {}}}};
}

PropertyDef norm_decomposition(const Structure& s, double tol) {
  const auto d = s.dim();
  return {"NORM_DECOMPOSITION", 3, 0, false, nullptr,
          [s, tol](const Sample& smp) {
            const auto& p = smp.points;
            const Vector o = Vector::Zero(p[0].size());
            const double xyz = s(p[0], p[1], p[2]);
            const double x00 = s(p[0], o, o);
            const double y0 = s(o, p[1], o);
            const double z0 = s(o, o, p[2]);
            const double sum = x00 + y0 + z0;
            Outcome out = eq_outcome(xyz, sum, tol);
            out.values = {{"xyz", xyz}, {"x00", x00}, {"0y0", y0}, {"00z", z0}, {"gap", sum - xyz}};
            return out;
          },
          {{{unit(d), unit(d), zero(d)}, {}}}};
}

PropertyDef snorm_invariance(const Structure& m, double tol) {
  const auto d = m.dim();
  const Vector o = zero(d);
  return {"SNORM_INVARIANCE", 4, 1, true, nullptr,
          [m, tol](const Sample& smp) {
            const auto& p = smp.points;  // x, y, z, a
            const double l = smp.scalars[0];
            const double original = m(p[0], p[1], p[2]);
            const double observed = m(l * p[0], l * p[1], l * p[2]);
            const double required = std::abs(l) * original;
            const double translated = m(p[0] + p[3], p[1] + p[3], p[2] + p[3]);
            Outcome out = eq_outcome(observed, required, tol);
            out.merge(eq_outcome(translated, original, tol));
            out.values = {{"observed", observed},
                          {"required", required},
                          {"translated", translated},
                          {"original", original}};
            return out;
          },
          {{{o, o, unit(d), o}, {2.0}}}};
}

std::vector<CheckReport> run_all(const std::vector<PropertyDef>& props, const SampleSpec& spec) {
  std::vector<CheckReport> out;
  out.reserve(props.size());
  for (const auto& p : props) out.push_back(run_property(p, spec));
  return out;
}

std::vector<PropertyDef> properties_for(const Structure& s, double tol) {
  switch (s.kind()) {
    case Kind::Norm: return {n1(s, tol), n2(s, tol), n3(s, tol), n4(s, tol)};
    case Kind::Metric: return {m1(s, tol), m2(s, tol), m3(s, tol)};
    case Kind::SNorm:
      return {positivity(s, "NS1", tol), homogeneity(s, "NS2", tol), ns3(s, tol)};
    case Kind::SMetric: return {s1(s, tol), s2(s, tol)};
    case Kind::GNorm:
      return {positivity(s, "NG1", tol), ng2(s, tol), homogeneity(s, "NG3", tol), ng4(s, tol),
              ng5(s, tol)};
  }
  return {};
}

}  // namespace

std::vector<CheckReport> check_norm(const Structure& n, const SampleSpec& spec, double tol) {
  n.require_kind(Kind::Norm, "check_norm");
  spec.validate(n.dim());
  return run_all(properties_for(n, tol), spec);
}

std::vector<CheckReport> check_metric(const Structure& d, const SampleSpec& spec, double tol) {
  d.require_kind(Kind::Metric, "check_metric");
  spec.validate(d.dim());
  return run_all(properties_for(d, tol), spec);
}

std::vector<CheckReport> check_snorm(const Structure& s, const SampleSpec& spec, double tol) {
  s.require_kind(Kind::SNorm, "check_snorm");
  spec.validate(s.dim());
  return run_all(properties_for(s, tol), spec);
}

std::vector<CheckReport> check_smetric(const Structure& m, const SampleSpec& spec, double tol) {
  m.require_kind(Kind::SMetric, "check_smetric");
  spec.validate(m.dim());
  return run_all(properties_for(m, tol), spec);
}

std::vector<CheckReport> check_gnorm(const Structure& g, const SampleSpec& spec, double tol) {
  if (g.kind() != Kind::GNorm && g.kind() != Kind::SNorm) {
    throw KindMismatch("check_gnorm: expected GNORM or SNORM, got " +
                       std::string(to_string(g.kind())));
  }
  spec.validate(g.dim());
  const Structure as_g = g.kind() == Kind::GNorm ? g : g.relabel(Kind::GNorm, "probe_as_gnorm");
  return run_all(properties_for(as_g, tol), spec);
}

CheckReport check_lemma3_symmetry(const Structure& s, const SampleSpec& spec, double tol) {
  s.require_kind(Kind::SNorm, "check_lemma3_symmetry");
  spec.validate(s.dim());
  return run_property(symmetric_pair(s, tol), spec);
}

CheckReport falsify_norm_generated(const Structure& s, const SampleSpec& spec, double tol) {
  s.require_kind(Kind::SNorm, "falsify_norm_generated");
  spec.validate(s.dim());
  return run_property(norm_decomposition(s, tol), spec);
}

CheckReport falsify_snorm_generated(const Structure& m, const SampleSpec& spec, double tol) {
  m.require_kind(Kind::SMetric, "falsify_snorm_generated");
  spec.validate(m.dim());
  return run_property(snorm_invariance(m, tol), spec);
}

std::vector<CheckReport> check_axioms(const Structure& s, const SampleSpec& spec, double tol) {
  switch (s.kind()) {
    case Kind::Norm: return check_norm(s, spec, tol);
    case Kind::Metric: return check_metric(s, spec, tol);
    case Kind::SNorm: {
      auto reports = check_snorm(s, spec, tol);
      reports.push_back(check_lemma3_symmetry(s, spec, tol));
      return reports;
    }
    case Kind::SMetric: return check_smetric(s, spec, tol);
    case Kind::GNorm: return check_gnorm(s, spec, tol);
  }
  return {};
}

PropertyDef axiom_property(const Structure& s, std::string_view property_id, double tol) {
  Structure target = s;
  if (property_id.substr(0, 2) == "NG" && s.kind() == Kind::SNorm) {
    target = s.relabel(Kind::GNorm, "probe_as_gnorm");
  }
  for (auto& p : properties_for(target, tol)) {
    if (p.id == property_id) return p;
  }
  if (s.kind() == Kind::SNorm && property_id == "PAIR_SYMMETRY") return symmetric_pair(s, tol);
  if (s.kind() == Kind::SNorm && property_id == "NORM_DECOMPOSITION") {
    return norm_decomposition(s, tol);
  }
  if (s.kind() == Kind::SMetric && property_id == "SNORM_INVARIANCE") {
    return snorm_invariance(s, tol);
  }
  throw UnknownId("no property '" + std::string(property_id) + "' for a " +
                  std::string(to_string(s.kind())));
}

Outcome replay(const Structure& s, const CheckReport& report, double tol) {
  if (!report.witness) throw InvalidArgument(report.property_id + ": report has no witness");
  const PropertyDef p = axiom_property(s, report.property_id, tol);
  return p.eval(Sample{report.witness->points, report.witness->scalars});
}

}  // namespace snorm
