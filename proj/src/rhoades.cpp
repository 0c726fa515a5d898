#include "snorm/rhoades.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

#include "snorm/generators.hpp"
#include "snorm/setanalysis.hpp"

namespace snorm {

namespace {

Vector filled(std::size_t dim, double v) {
  return Vector::Constant(static_cast<Eigen::Index>(dim), v);
}

SelfMap box_map(std::string name, std::size_t dim, double low, double high,
                std::function<Vector(const Vector&)> f) {
  return {std::move(f), filled(dim, low), filled(dim, high), std::move(name)};
}

void require_pair(const SelfMap& t, const Structure& s, const Vector& x, const Vector& y) {
  require_point(x, s.dim(), "x");
  require_point(y, s.dim(), "y");
  if (t.dim() != s.dim()) throw DimensionMismatch("map and structure dimensions differ");
  if (exactly_equal(x, y)) throw ExcludedPair("conditions are defined only for x != y");
  if (!t.in_domain(x) || !t.in_domain(y)) throw OutOfDomain("x and y must lie in the map's domain");
}

ConditionVerdict verdict_of(double lhs, const std::array<double, 5>& terms) {
  ConditionVerdict v;
  v.lhs = lhs;
  v.terms = terms;
  v.rhs = *std::max_element(terms.begin(), terms.end());
  v.holds = v.lhs < v.rhs;
  v.margin = v.rhs - v.lhs;
  return v;
}

/// Slack of a strict inequality, normalized like le_outcome.
Outcome strict_outcome(const ConditionVerdict& v) {
  Outcome o;
  const double scale = std::max({std::abs(v.lhs), std::abs(v.rhs), kAbsoluteFloor});
  o.slack = v.margin / scale;
  o.violated = !v.holds;
  return o;
}

void require_box_inside(const SelfMap& t, const SampleSpec& spec) {
  spec.validate(t.dim());
  if ((spec.box_low.array() < t.domain_low.array()).any() ||
      (spec.box_high.array() > t.domain_high.array()).any()) {
    throw OutOfDomain("sample box must lie inside the map's domain");
  }
}

bool not_equal_pair(const Sample& s) { return !exactly_equal(s.points[0], s.points[1]); }

/// Points of a regular grid with `per_axis` nodes per coordinate in [low, high].
std::vector<Vector> grid_points(const Vector& low, const Vector& high, std::size_t per_axis) {
  const auto dim = static_cast<std::size_t>(low.size());
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= per_axis;
  std::vector<Vector> out;
  out.reserve(total);
  for (std::size_t k = 0; k < total; ++k) {
    Vector p(low.size());
    std::size_t rest = k;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t j = rest % per_axis;
      rest /= per_axis;
      const auto e = static_cast<Eigen::Index>(i);
      p(e) = per_axis == 1 ? 0.5 * (low(e) + high(e))
                           : low(e) + (high(e) - low(e)) * static_cast<double>(j) /
                                          static_cast<double>(per_axis - 1);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Largest per-axis count <= wanted whose grid stays within cap cells.
std::size_t capped_per_axis(std::size_t wanted, std::size_t dim, std::size_t cap) {
  std::size_t g = std::max<std::size_t>(wanted, 2);
  auto cells = [dim](std::size_t per) {
    double c = 1.0;
    for (std::size_t i = 0; i < dim; ++i) c *= static_cast<double>(per);
    return c;
  };
  while (g > 2 && cells(g) > static_cast<double>(cap)) --g;
  return g;
}

struct Candidate {
  Vector point;
  double residual = std::numeric_limits<double>::infinity();
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.residual != b.residual) return a.residual < b.residual;
  return lexicographic_less(a.point, b.point);
}

struct BudgetExhausted {};

class Search {
 public:
  Search(const SelfMap& t, const Structure& s, std::size_t budget) : t_(t), s_(s), budget_(budget) {}

  /// Residual at x together with T(x); counts one map evaluation.
  std::pair<double, Vector> evaluate(const Vector& x) {
    if (evaluations_ >= budget_) throw BudgetExhausted{};
    ++evaluations_;
    Vector tx = t_(x);
    const double r = pair_value(s_, tx, x);
    return {r, std::move(tx)};
  }

  /// Iterates T from x until T(x) == x, no improvement in `patience` steps,
  /// or max_iterations; returns the best iterate.
  Candidate iterate(Vector x, std::size_t max_iterations) {
    constexpr std::size_t patience = 64;
    Candidate best{x};
    std::size_t stale = 0;
    for (std::size_t k = 0; k < max_iterations; ++k) {
      auto [r, tx] = evaluate(x);
      Candidate here{x, r};
      if (better(here, best)) {
        best = std::move(here);
        stale = 0;
      } else if (++stale >= patience) {
        break;
      }
      if (r == 0.0 || exactly_equal(tx, x)) break;
      x = std::move(tx);
    }
    return best;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const SelfMap& t_;
  const Structure& s_;
  std::size_t budget_;
  std::size_t evaluations_ = 0;
};

}  // namespace

bool SelfMap::in_domain(const Vector& x) const {
  if (x.size() != domain_low.size()) return false;
  return (x.array() >= domain_low.array()).all() && (x.array() <= domain_high.array()).all();
}

std::vector<std::string> builtin_map_ids() {
  return {"half", "shifted_half", "cosine", "identity", "negation", "half_sine"};
}

SelfMap builtin_map(std::string_view id, std::size_t dim) {
  if (dim == 0) throw InvalidDimension("map dimension must be at least 1");
  const std::string name(id);
  if (id == "half") return box_map(name, dim, -1.0, 1.0, [](const Vector& x) -> Vector { return x / 2.0; });
  if (id == "shifted_half") {
    return box_map(name, dim, -1.0, 1.0,
                   [](const Vector& x) -> Vector { return (x.array() + 0.5).matrix() / 2.0; });
  }
  if (id == "cosine") {
    return box_map(name, dim, 0.0, 1.0, [](const Vector& x) -> Vector { return x.array().cos().matrix(); });
  }
  if (id == "identity") return box_map(name, dim, -1.0, 1.0, [](const Vector& x) -> Vector { return x; });
  if (id == "negation") return box_map(name, dim, -1.0, 1.0, [](const Vector& x) -> Vector { return -x; });
  if (id == "half_sine") {
    return box_map(name, dim, -1.0, 1.0, [](const Vector& x) -> Vector {
      return (x.array() / 2.0 + 0.1 * x.array().sin()).matrix();
    });
  }
  throw UnknownId("unknown map id '" + name + "'");
}

void check_self_map(const SelfMap& t, std::size_t samples, std::uint64_t seed) {
  const std::size_t dim = t.dim();
  auto probe = [&t](const Vector& x) {
    const Vector tx = t(x);
    if (!all_finite(tx) || !t.in_domain(tx)) {
      throw NotASelfMap("map '" + t.name + "' leaves its domain", x);
    }
  };
  if (dim <= 10) {
    for (const auto& corner : grid_points(t.domain_low, t.domain_high, 2)) probe(corner);
  }
  PropertyDef def;
  def.id = "SELF_MAP";
  def.num_points = 1;
  SampleSpec spec{t.domain_low, t.domain_high, samples, seed};
  for (std::size_t i = 0; i < samples; ++i) probe(draw_sample(def, spec, i).points[0]);
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::NS25: return "NS25";
    case Condition::S25: return "S25";
    case Condition::NR25: return "NR25";
    case Condition::R25: return "R25";
  }
  return "?";
}

Condition condition_from_string(std::string_view text) {
  std::string upper(text);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Condition c : {Condition::NS25, Condition::S25, Condition::NR25, Condition::R25}) {
    if (upper == to_string(c)) return c;
  }
  throw UnknownId("unknown condition '" + std::string(text) + "'");
}

Kind structure_kind(Condition c) {
  switch (c) {
    case Condition::NS25: return Kind::SNorm;
    case Condition::S25: return Kind::SMetric;
    case Condition::NR25: return Kind::Norm;
    case Condition::R25: return Kind::Metric;
  }
  return Kind::SNorm;
}

ConditionVerdict ns25_at(const SelfMap& t, const Structure& s, const Vector& x, const Vector& y) {
  s.require_kind(Kind::SNorm, "ns25_at");
  require_pair(t, s, x, y);
  const Vector tx = t(x);
  const Vector ty = t(y);
  return verdict_of(pair_value(s, tx, ty), {pair_value(s, x, y), pair_value(s, tx, x), pair_value(s, ty, y),
                                            pair_value(s, ty, x), pair_value(s, tx, y)});
}

ConditionVerdict s25_at(const SelfMap& t, const Structure& m, const Vector& x, const Vector& y) {
  m.require_kind(Kind::SMetric, "s25_at");
  require_pair(t, m, x, y);
  const Vector tx = t(x);
  const Vector ty = t(y);
  return verdict_of(m(tx, tx, ty), {m(x, x, y), m(tx, tx, x), m(ty, ty, y), m(ty, ty, x), m(tx, tx, y)});
}

ConditionVerdict nr25_at(const SelfMap& t, const Structure& n, const Vector& x, const Vector& y) {
  n.require_kind(Kind::Norm, "nr25_at");
  require_pair(t, n, x, y);
  const Vector tx = t(x);
  const Vector ty = t(y);
  return verdict_of(n(Vector(tx - ty)),
                    {n(Vector(x - y)), n(Vector(x - tx)), n(Vector(y - ty)), n(Vector(x - ty)), n(Vector(y - tx))});
}

ConditionVerdict r25_at(const SelfMap& t, const Structure& d, const Vector& x, const Vector& y) {
  d.require_kind(Kind::Metric, "r25_at");
  require_pair(t, d, x, y);
  const Vector tx = t(x);
  const Vector ty = t(y);
  return verdict_of(d(tx, ty), {d(x, y), d(x, tx), d(y, ty), d(x, ty), d(y, tx)});
}

ConditionVerdict condition_at(Condition c, const SelfMap& t, const Structure& s, const Vector& x,
                              const Vector& y) {
  switch (c) {
    case Condition::NS25: return ns25_at(t, s, x, y);
    case Condition::S25: return s25_at(t, s, x, y);
    case Condition::NR25: return nr25_at(t, s, x, y);
    case Condition::R25: return r25_at(t, s, x, y);
  }
  throw InvalidArgument("unknown condition");
}

SampleSpec domain_spec(const SelfMap& t, std::size_t count, std::uint64_t seed) {
  return SampleSpec{t.domain_low, t.domain_high, count, seed};
}

ConditionSurvey survey_condition(Condition c, const SelfMap& t, const Structure& s, const SampleSpec& spec) {
  s.require_kind(structure_kind(c), "survey_condition");
  require_box_inside(t, spec);
  PropertyDef def;
  def.id = std::string(to_string(c)) + "_SURVEY";
  def.num_points = 2;
  def.accept = not_equal_pair;

  ConditionSurvey r;
  r.condition = c;
  r.samples = spec.count;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const Sample sample = draw_sample(def, spec, i);
    const auto v = condition_at(c, t, s, sample.points[0], sample.points[1]);
    if (v.holds) continue;
    if (r.violations++ == 0) {
      r.first_violation = std::pair{sample.points[0], sample.points[1]};
      r.first_violation_verdict = v;
    }
  }
  r.pass_rate = static_cast<double>(r.samples - r.violations) / static_cast<double>(r.samples);
  return r;
}

namespace {

CheckReport check_implication(std::string id, const SelfMap& t, const SampleSpec& spec,
                              std::function<ConditionVerdict(const Vector&, const Vector&)> antecedent,
                              std::function<ConditionVerdict(const Vector&, const Vector&)> consequent) {
  require_box_inside(t, spec);
  PropertyDef def;
  def.id = std::move(id);
  def.num_points = 2;
  def.accept = not_equal_pair;
  def.eval = [antecedent = std::move(antecedent), consequent = std::move(consequent)](const Sample& s) {
    const auto a = antecedent(s.points[0], s.points[1]);
    if (!a.holds) {
      Outcome skip;
      skip.applicable = false;
      return skip;
    }
    const auto c = consequent(s.points[0], s.points[1]);
    Outcome o = strict_outcome(c);
    o.values = {{"antecedent_lhs", a.lhs}, {"antecedent_rhs", a.rhs},
                {"consequent_lhs", c.lhs}, {"consequent_rhs", c.rhs}};
    return o;
  };
  return run_property(def, spec);
}

}  // namespace

CheckReport check_prop7(const SelfMap& t, const Structure& s, const SampleSpec& spec) {
  s.require_kind(Kind::SNorm, "check_prop7");
  const Structure m = smetric_from_snorm(s);
  return check_implication(
      "NS25_IMPLIES_S25", t, spec, [&t, s](const Vector& x, const Vector& y) { return ns25_at(t, s, x, y); },
      [&t, m](const Vector& x, const Vector& y) { return s25_at(t, m, x, y); });
}

CheckReport check_prop8(const SelfMap& t, const Structure& n, const SampleSpec& spec) {
  n.require_kind(Kind::Norm, "check_prop8");
  const Structure s = snorm_from_norm(n);
  return check_implication(
      "NR25_IMPLIES_NS25", t, spec, [&t, n](const Vector& x, const Vector& y) { return nr25_at(t, n, x, y); },
      [&t, s](const Vector& x, const Vector& y) { return ns25_at(t, s, x, y); });
}

double fixed_point_residual(const SelfMap& t, const Structure& s, const Vector& x) {
  s.require_kind(Kind::SNorm, "fixed_point_residual");
  return pair_value(s, t(x), x);
}

FixedPointResult find_fixed_point(const SelfMap& t, const Structure& s, double tol, std::size_t budget,
                                  const FixedPointConfig& config) {
  s.require_kind(Kind::SNorm, "find_fixed_point");
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (t.dim() != s.dim()) throw DimensionMismatch("map and structure dimensions differ");
  check_self_map(t, config.self_map_samples, config.seed);

  const std::size_t dim = t.dim();
  Search search(t, s, budget);
  Candidate best;
  std::string method;
  auto offer = [&](Candidate c, const char* stage) {
    if (better(c, best)) {
      best = std::move(c);
      method = stage;
    }
  };

  try {
    // Multi-start iteration: box centre first, then seeded random starts.
    PropertyDef starts;
    starts.id = "FIXPOINT_START";
    starts.num_points = 1;
    const SampleSpec start_spec = domain_spec(t, config.starts, config.seed);
    for (std::size_t i = 0; i < config.starts; ++i) {
      Vector x0 = i == 0 ? Vector((t.domain_low + t.domain_high) / 2.0)
                         : draw_sample(starts, start_spec, i - 1).points[0];
      offer(search.iterate(std::move(x0), config.max_iterations), "iteration");
    }

    if (best.residual > tol) {
      const std::size_t per_axis = capped_per_axis(config.grid_per_axis, dim, config.grid_cap);
      std::vector<Candidate> grid;
      for (auto& p : grid_points(t.domain_low, t.domain_high, per_axis)) {
        const double r = search.evaluate(p).first;
        grid.push_back({std::move(p), r});
      }
      std::sort(grid.begin(), grid.end(), better);
      grid.resize(std::min(grid.size(), std::max<std::size_t>(config.keep_best, 1)));
      for (const auto& c : grid) offer(c, "grid");

      Vector half_width = (t.domain_high - t.domain_low) / static_cast<double>(per_axis - 1);
      const std::size_t refine_axis = capped_per_axis(config.refine_per_axis, dim, config.grid_cap);
      for (std::size_t depth = 0; depth < config.refine_depth && best.residual > tol; ++depth) {
        for (auto& c : grid) {
          const Vector low = (c.point - half_width).cwiseMax(t.domain_low);
          const Vector high = (c.point + half_width).cwiseMin(t.domain_high);
          for (auto& p : grid_points(low, high, refine_axis)) {
            const double r = search.evaluate(p).first;
            Candidate here{std::move(p), r};
            if (better(here, c)) c = std::move(here);
          }
          offer(c, "refinement");
        }
        half_width *= 2.0 / static_cast<double>(refine_axis - 1);
      }
    }
  } catch (const BudgetExhausted&) {
    // Falls through to the convergence test with the best point so far.
  }

  if (!(best.residual <= tol)) {
    throw NoConvergence("no point with residual <= tol within the evaluation budget",
                        best.point.size() ? best.point : Vector((t.domain_low + t.domain_high) / 2.0),
                        best.residual);
  }

  FixedPointResult result;
  result.point = best.point;
  result.residual = fixed_point_residual(t, s, best.point);
  result.method = method;

  UniquenessReport& u = result.uniqueness;
  u.basins.push_back(best.point);
  try {
    const std::size_t per_axis = capped_per_axis(config.scan_per_axis, dim, config.grid_cap);
    for (auto& p : grid_points(t.domain_low, t.domain_high, per_axis)) {
      ++u.scan_starts;
      const Candidate c = search.iterate(std::move(p), config.max_iterations);
      if (!(c.residual <= tol)) continue;
      ++u.converged_starts;
      const bool known = std::any_of(u.basins.begin(), u.basins.end(), [&](const Vector& b) {
        return pair_value(s, c.point, b) <= 10.0 * tol;
      });
      if (!known) u.basins.push_back(c.point);
    }
  } catch (const BudgetExhausted&) {
    // The scan covers the starts reached before the budget ran out.
  }
  u.unique = u.basins.size() == 1;
  result.evaluations = search.evaluations();
  return result;
}

std::vector<std::pair<Vector, double>> residual_landscape(const SelfMap& t, const Structure& s,
                                                          std::size_t per_axis) {
  s.require_kind(Kind::SNorm, "residual_landscape");
  if (t.dim() != s.dim()) throw DimensionMismatch("map and structure dimensions differ");
  if (t.dim() > 2) throw InvalidDimension("residual landscape supports 1-D and 2-D domains only");
  if (per_axis < 2) throw InvalidArgument("landscape needs at least 2 points per axis");
  std::vector<std::pair<Vector, double>> out;
  for (auto& p : grid_points(t.domain_low, t.domain_high, per_axis)) {
    const double r = fixed_point_residual(t, s, p);
    out.emplace_back(std::move(p), r);
  }
  return out;
}

}  // namespace snorm
