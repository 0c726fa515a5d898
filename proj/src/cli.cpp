#include "snorm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "snorm/axioms.hpp"
#include "snorm/catalog.hpp"
#include "snorm/error.hpp"
#include "snorm/geometry.hpp"
#include "snorm/report_json.hpp"
#include "snorm/rhoades.hpp"
#include "snorm/sequences.hpp"
#include "snorm/setanalysis.hpp"

namespace snorm::cli {

namespace {

/// Usage or IO problem detected after parsing; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

Vector parse_vector(const std::string& text, const char* what) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    coords.push_back(v);
  }
  if (coords.empty()) throw UsageError(std::string("empty vector for ") + what);
  return vec(coords);
}

std::string default_id(const std::string& stem, std::size_t dim) { return stem + ".d" + std::to_string(dim); }

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << dump(j);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << dump(j);
  if (!file) throw UsageError("failed writing '" + path + "'");
}

template <typename Writer>
void write_file(const std::string& path, Writer writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  writer(file);
  if (!file) throw UsageError("failed writing '" + path + "'");
}

struct AxiomsArgs {
  std::string id;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  double tol = kDefaultTolerance;
  double box = 10.0;
  std::string out;
  std::string as;
  std::string falsify;
  unsigned threads = 1;
};

int cmd_axioms(const AxiomsArgs& a, std::ostream& out) {
  Structure s = lookup(a.id);
  if (!a.as.empty()) {
    const Kind kind = kind_from_string(a.as);
    if (kind != s.kind()) s = s.relabel(kind, "as:" + std::string(to_string(kind)));
  }
  SampleSpec spec = SampleSpec::cube(s.dim(), -a.box, a.box, a.samples, a.seed);
  spec.threads = a.threads;

  std::vector<CheckReport> reports;
  if (a.falsify == "norm-generated") {
    reports.push_back(falsify_norm_generated(s, spec, a.tol));
  } else if (a.falsify == "snorm-generated") {
    reports.push_back(falsify_snorm_generated(s, spec, a.tol));
  } else if (!a.falsify.empty()) {
    throw UsageError("--falsify expects norm-generated or snorm-generated");
  } else {
    reports = check_axioms(s, spec, a.tol);
  }

  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  Json j;
  j["command"] = "axioms";
  j["structure"] = json_of(s);
  j["samples"] = a.samples;
  j["seed"] = a.seed;
  j["tol"] = a.tol;
  j["box"] = {-a.box, a.box};
  j["verdict"] = all_pass ? "PASS" : "FAIL";
  j["reports"] = Json::array();
  for (const auto& r : reports) j["reports"].push_back(json_of(r));
  emit(j, a.out, out);
  return all_pass ? kExitPass : kExitFailure;
}

struct BallArgs {
  std::string preset;
  std::string snorm;
  std::string x0, a1, a2;
  std::optional<double> r;
  std::size_t resolution = 360;
  std::string svg, csv, out;
  bool closed = false;
};

int cmd_ball(const BallArgs& a, std::ostream& out) {
  BallSpec b;
  std::string snorm_id = "snorm.sum_abs.d2";
  if (a.preset == "fig1a") {
    b = fig1a_ball();
  } else if (a.preset == "fig1b") {
    b = fig1b_ball();
    snorm_id = "snorm.example6.d2";
  } else if (a.preset == "degenerate") {
    b = {vec({0.0, 0.0}), vec({0.0, 0.0}), vec({0.0, 0.0}), 3.0, false};
  } else if (!a.preset.empty()) {
    throw UsageError("unknown preset '" + a.preset + "'");
  } else if (a.x0.empty() || a.a1.empty() || a.a2.empty() || !a.r) {
    throw UsageError("ball needs --preset or all of --x0, --a1, --a2 and --r");
  }
  if (!a.snorm.empty()) snorm_id = a.snorm;
  if (!a.x0.empty()) b.center = parse_vector(a.x0, "--x0");
  if (!a.a1.empty()) b.anchor1 = parse_vector(a.a1, "--a1");
  if (!a.a2.empty()) b.anchor2 = parse_vector(a.a2, "--a2");
  if (a.r) b.radius = *a.r;
  if (a.closed) b.closed = true;

  const Structure s = lookup(snorm_id);
  if (s.dim() != 2) throw UsageError("ball tracing needs a 2-D S-norm");
  try {
    b.validate(2);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const Polyline poly = trace_boundary_2d(s, b, a.resolution);
  double worst = 0.0;
  for (const auto& v : poly) {
    worst = std::max(worst, std::abs(ball_value(s, b, Vector(v.point)) - b.radius));
  }
  if (!a.csv.empty()) write_file(a.csv, [&](std::ostream& f) { write_boundary_csv(f, poly); });
  if (!a.svg.empty()) write_file(a.svg, [&](std::ostream& f) { write_boundary_svg(f, poly); });

  Json j;
  j["command"] = "ball";
  j["structure"] = json_of(s);
  j["center"] = json_of(b.center);
  j["anchor1"] = json_of(b.anchor1);
  j["anchor2"] = json_of(b.anchor2);
  j["radius"] = b.radius;
  j["closed"] = b.closed;
  j["resolution"] = a.resolution;
  j["vertices"] = poly.size();
  j["max_level_error"] = worst;
  j["csv"] = a.csv.empty() ? Json(nullptr) : Json(a.csv);
  j["svg"] = a.svg.empty() ? Json(nullptr) : Json(a.svg);
  emit(j, a.out, out);
  return kExitPass;
}

struct FixpointArgs {
  std::string map;
  std::string snorm = "snorm.sum_abs.d1";
  double tol = 1e-6;
  std::size_t budget = 1000000;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  std::string out, landscape;
};

/// Non-diametral member of a finite sample of the domain, as evidence for
/// normal structure.
Json normal_structure_evidence(const SelfMap& t, const Structure& s, std::uint64_t seed) {
  PropertyDef def;
  def.id = "NORMAL_STRUCTURE_SAMPLE";
  def.num_points = 1;
  const SampleSpec spec = domain_spec(t, 64, seed);
  std::vector<Vector> points;
  for (std::size_t i = 0; i < spec.count; ++i) points.push_back(draw_sample(def, spec, i).points[0]);
  const PointSet set(std::move(points));
  const auto w = normal_structure_witness(set, s);
  Json j;
  j["sample_size"] = set.size();
  j["diameter"] = s_diameter(set, s);
  j["non_diametral_index"] = w.index ? Json(*w.index) : Json(nullptr);
  j["non_diametral_point"] = w.point ? json_of(*w.point) : Json(nullptr);
  j["radius_at_witness"] = w.point ? Json(s_radius_at(set, *w.point, s)) : Json(nullptr);
  return j;
}

int cmd_fixpoint(const FixpointArgs& a, std::ostream& out) {
  const Structure s = lookup(a.snorm);
  s.require_kind(Kind::SNorm, "fixpoint --snorm");
  const SelfMap t = builtin_map(a.map, s.dim());

  Json j;
  j["command"] = "fixpoint";
  j["label"] = "demonstration";
  j["map"] = t.name;
  j["domain_low"] = json_of(t.domain_low);
  j["domain_high"] = json_of(t.domain_high);
  j["structure"] = json_of(s);
  j["tol"] = a.tol;
  j["seed"] = a.seed;

  const auto survey = survey_condition(Condition::NS25, t, s, domain_spec(t, a.samples, a.seed));
  j["condition_pass_rate"] = survey.pass_rate;
  j["violations"] = survey.violations;

  FixedPointConfig config;
  config.seed = a.seed;
  int code = kExitPass;
  try {
    const Json result = json_of(find_fixed_point(t, s, a.tol, a.budget, config));
    for (const auto& [key, value] : result.items()) j[key] = value;
  } catch (const NoConvergence& e) {
    j["fixed_point"] = nullptr;
    j["error"] = e.what();
    j["best_candidate"] = json_of(e.best());
    j["best_residual"] = e.residual();
    code = kExitFailure;
  } catch (const NotASelfMap& e) {
    j["fixed_point"] = nullptr;
    j["error"] = e.what();
    j["escaping_point"] = json_of(e.witness());
    code = kExitFailure;
  }

  Json evidence;
  evidence["ns25"] = json_of(survey);
  evidence["normal_structure"] = normal_structure_evidence(t, s, a.seed);
  j["evidence"] = std::move(evidence);

  if (!a.landscape.empty()) {
    const auto grid = residual_landscape(t, s, s.dim() == 1 ? 201 : 65);
    write_file(a.landscape, [&](std::ostream& f) {
      for (std::size_t i = 0; i < s.dim(); ++i) f << 'x' << i + 1 << ',';
      f << "residual\n";
      char buf[64];
      for (const auto& [p, r] : grid) {
        for (Eigen::Index i = 0; i < p.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%.17g,", p(i));
          f << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g\n", r);
        f << buf;
      }
    });
  }
  emit(j, a.out, out);
  return code;
}

struct RhoadesArgs {
  std::string map;
  std::string condition = "ns25";
  std::string structure;
  std::size_t dim = 1;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  std::string out;
};

int cmd_rhoades(const RhoadesArgs& a, std::ostream& out) {
  std::string cond = a.condition;
  std::transform(cond.begin(), cond.end(), cond.begin(), [](unsigned char c) { return std::tolower(c); });
  const bool implication = cond == "prop7" || cond == "prop8";
  std::string stem;
  if (cond == "ns25" || cond == "prop7") stem = "snorm.sum_abs";
  else if (cond == "s25") stem = "smetric.from_sum_abs";
  else if (cond == "nr25" || cond == "prop8") stem = "norm.euclidean";
  else if (cond == "r25") stem = "metric.euclidean";
  else throw UsageError("unknown condition '" + a.condition + "'");

  const Structure s = lookup(a.structure.empty() ? default_id(stem, a.dim) : a.structure);
  const SelfMap t = builtin_map(a.map, s.dim());
  const SampleSpec spec = domain_spec(t, a.samples, a.seed);

  Json j;
  j["command"] = "rhoades";
  j["map"] = t.name;
  j["structure"] = json_of(s);
  j["condition"] = cond;
  j["samples"] = a.samples;
  j["seed"] = a.seed;
  int code = kExitPass;
  if (implication) {
    const auto report = cond == "prop7" ? check_prop7(t, s, spec) : check_prop8(t, s, spec);
    j["report"] = json_of(report);
    code = report.passed() ? kExitPass : kExitFailure;
  } else {
    const auto survey = survey_condition(condition_from_string(cond), t, s, spec);
    const Json fields = json_of(survey);
    for (const auto& [key, value] : fields.items()) j[key] = value;
    code = survey.violations == 0 ? kExitPass : kExitFailure;
  }
  emit(j, a.out, out);
  return code;
}

PointSet read_point_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(file, line)) throw UsageError("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string h;
    while (std::getline(ss, h, ',')) header.push_back(h);
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != "x" + std::to_string(i + 1)) {
      throw UsageError("header must be x1,...,xn; got '" + line + "'");
    }
  }
  if (header.empty()) throw UsageError("header must be x1,...,xn");
  std::vector<Vector> points;
  std::size_t row = 1;
  while (std::getline(file, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Vector p = parse_vector(line, ("row " + std::to_string(row)).c_str());
    if (dim_of(p) != header.size()) throw UsageError("row " + std::to_string(row) + " has the wrong arity");
    if (!all_finite(p)) throw UsageError("row " + std::to_string(row) + " is not finite");
    points.push_back(std::move(p));
  }
  if (points.empty()) throw UsageError("'" + path + "' has no points");
  return PointSet(std::move(points));
}

int cmd_sets(const std::string& path, const std::string& snorm_id, const std::string& out_path,
             std::ostream& out) {
  const PointSet set = read_point_csv(path);
  const Structure s = lookup(snorm_id.empty() ? default_id("snorm.sum_abs", set.dim()) : snorm_id);
  s.require_kind(Kind::SNorm, "sets --snorm");
  if (s.dim() != set.dim()) throw UsageError("--snorm dimension does not match the points");
  Json j;
  j["command"] = "sets";
  j["structure"] = json_of(s);
  j["size"] = set.size();
  j["dim"] = set.dim();
  const Json fields = json_of(analyze_set(set, s));
  for (const auto& [key, value] : fields.items()) j[key] = value;
  emit(j, out_path, out);
  return kExitPass;
}

struct SeqArgs {
  std::string id;
  double eps = 1e-3;
  std::size_t horizon = 10000;
  std::string snorm, csv, out;
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
  if (a.horizon < 2) throw UsageError("--horizon must be at least 2");
  if (!(a.eps > 0.0)) throw UsageError("--eps must be positive");
  const NamedSequence seq = builtin_sequence(a.id, a.horizon, a.eps);
  const std::size_t dim = dim_of(seq.spec.generator(1));
  const Structure s = lookup(a.snorm.empty() ? default_id("snorm.sum_abs", dim) : a.snorm);
  s.require_kind(Kind::SNorm, "seq --snorm");
  if (s.dim() != dim) throw UsageError("--snorm dimension does not match the sequence");

  const auto completeness = classify_completeness_witness(seq.spec, s);
  Json j;
  j["command"] = "seq";
  j["sequence"] = seq.id;
  j["structure"] = json_of(s);
  j["eps"] = a.eps;
  j["horizon"] = a.horizon;
  j["known_limit"] = seq.limit ? json_of(*seq.limit) : Json(nullptr);
  j["convergence"] = seq.limit ? json_of(check_convergence(seq.spec, *seq.limit, s)) : Json(nullptr);
  const Json fields = json_of(completeness);
  for (const auto& [key, value] : fields.items()) j[key] = value;

  if (!a.csv.empty()) {
    const Vector limit = seq.limit ? *seq.limit : completeness.candidate;
    const auto values = tail_values(seq.spec, limit, s);
    write_file(a.csv, [&](std::ostream& f) {
      f << "n,tail_value\n";
      char buf[64];
      for (std::size_t n = 1; n <= values.size(); ++n) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", n, values[n - 1]);
        f << buf;
      }
    });
  }
  emit(j, a.out, out);
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational toolkit for S-normed spaces"};
  app.name("snorm");
  app.require_subcommand(1);

  AxiomsArgs ax;
  auto* axioms = app.add_subcommand("axioms", "Sampled axiom checks for a catalog structure");
  axioms->add_option("structure_id", ax.id, "Catalog id, e.g. snorm.example6.d1")->required();
  axioms->add_option("--samples", ax.samples, "Random samples per property")->capture_default_str();
  axioms->add_option("--seed", ax.seed, "Sampling seed")->capture_default_str();
  axioms->add_option("--tol", ax.tol, "Relative tolerance")->capture_default_str();
  axioms->add_option("--box", ax.box, "Samples are drawn from [-box, box]^n")->capture_default_str();
  axioms->add_option("--out", ax.out, "Write the JSON report here");
  axioms->add_option("--as", ax.as, "Check under another kind of the same arity (e.g. gnorm)");
  axioms->add_option("--falsify", ax.falsify, "norm-generated or snorm-generated");
  axioms->add_option("--threads", ax.threads, "Worker threads")->capture_default_str();

  BallArgs ba;
  auto* ball = app.add_subcommand("ball", "Trace the boundary of an open ball in R^2");
  ball->add_option("--preset", ba.preset, "fig1a, fig1b or degenerate");
  ball->add_option("--snorm", ba.snorm, "Catalog id of a 2-D S-norm");
  ball->add_option("--x0", ba.x0, "Centre, comma separated");
  ball->add_option("--a1", ba.a1, "First anchor");
  ball->add_option("--a2", ba.a2, "Second anchor");
  ball->add_option("--r", ba.r, "Radius");
  ball->add_option("--resolution", ba.resolution, "Number of rays")->capture_default_str();
  ball->add_option("--svg", ba.svg, "SVG output path");
  ball->add_option("--csv", ba.csv, "CSV output path");
  ball->add_option("--out", ba.out, "Write the JSON summary here");
  ball->add_flag("--closed", ba.closed, "Closed ball");

  FixpointArgs fp;
  auto* fixpoint = app.add_subcommand("fixpoint", "Numerical fixed-point demonstration for a built-in map");
  fixpoint->add_option("map_id", fp.map, "half, shifted_half, cosine, identity, negation, half_sine")->required();
  fixpoint->add_option("--snorm", fp.snorm, "Catalog id of an S-norm")->capture_default_str();
  fixpoint->add_option("--tol", fp.tol, "Residual tolerance")->capture_default_str();
  fixpoint->add_option("--budget", fp.budget, "Map evaluation budget")->capture_default_str();
  fixpoint->add_option("--samples", fp.samples, "Pairs for the NS25 evidence")->capture_default_str();
  fixpoint->add_option("--seed", fp.seed, "Seed")->capture_default_str();
  fixpoint->add_option("--out", fp.out, "Write the JSON report here");
  fixpoint->add_option("--landscape", fp.landscape, "CSV of the residual over a grid (1-D/2-D)");

  RhoadesArgs rh;
  auto* rhoades = app.add_subcommand("rhoades", "Sampled Rhoades-type condition or implication check");
  rhoades->add_option("map_id", rh.map, "Built-in map id")->required();
  rhoades->add_option("--condition", rh.condition, "ns25, s25, nr25, r25, prop7 or prop8")->capture_default_str();
  rhoades->add_option("--structure,--snorm", rh.structure, "Catalog id; defaults by condition");
  rhoades->add_option("--dim", rh.dim, "Dimension when --structure is omitted")->capture_default_str();
  rhoades->add_option("--samples", rh.samples, "Sampled pairs")->capture_default_str();
  rhoades->add_option("--seed", rh.seed, "Seed")->capture_default_str();
  rhoades->add_option("--out", rh.out, "Write the JSON report here");

  std::string set_file, set_snorm, set_out;
  auto* sets = app.add_subcommand("sets", "Diameter, Chebyshev radius and centre of a finite set");
  sets->add_option("file", set_file, "CSV with header x1,...,xn")->required();
  sets->add_option("--snorm", set_snorm, "Catalog id of an S-norm");
  sets->add_option("--out", set_out, "Write the JSON report here");

  SeqArgs sq;
  auto* seq = app.add_subcommand("seq", "Finite-horizon convergence and Cauchy analysis");
  seq->add_option("seq_id", sq.id, "Built-in sequence id")->required();
  seq->add_option("--eps", sq.eps, "Tolerance")->capture_default_str();
  seq->add_option("--horizon", sq.horizon, "Number of terms")->capture_default_str();
  seq->add_option("--snorm", sq.snorm, "Catalog id of an S-norm");
  seq->add_option("--csv", sq.csv, "CSV of (n, tail value)");
  seq->add_option("--out", sq.out, "Write the JSON report here");

  std::size_t catalog_dim = 3;
  auto* catalog = app.add_subcommand("catalog", "List catalog ids");
  catalog->add_option("--max-dim", catalog_dim, "Largest dimension listed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*axioms) return cmd_axioms(ax, out);
    if (*ball) return cmd_ball(ba, out);
    if (*fixpoint) return cmd_fixpoint(fp, out);
    if (*rhoades) return cmd_rhoades(rh, out);
    if (*sets) return cmd_sets(set_file, set_snorm, set_out, out);
    if (*seq) return cmd_seq(sq, out);
    if (*catalog) {
      Json j = Json::array();
      for (const auto& id : catalog_ids(catalog_dim)) j.push_back(id);
      out << dump(j);
      return kExitPass;
    }
  } catch (const TraceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace snorm::cli
