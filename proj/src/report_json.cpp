#include "snorm/report_json.hpp"

namespace snorm {

namespace {

template <typename T>
Json optional_of(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json observations(const std::vector<Observation>& values) {
  Json out = Json::object();
  for (const auto& [name, value] : values) out[name] = value;
  return out;
}

}  // namespace

Json json_of(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json json_of(const Structure& s) {
  Json out;
  out["name"] = s.name();
  out["kind"] = std::string(to_string(s.kind()));
  out["dim"] = s.dim();
  out["provenance"] = s.provenance();
  return out;
}

Json json_of(const CheckReport& r) {
  Json out;
  out["property_id"] = r.property_id;
  out["verdict"] = std::string(to_string(r.verdict));
  if (r.witness) {
    Json w;
    w["points"] = Json::array();
    for (const auto& p : r.witness->points) w["points"].push_back(json_of(p));
    w["scalars"] = r.witness->scalars;
    w["values"] = observations(r.witness->values);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["samples_used"] = r.samples_used;
  out["applicable_samples"] = r.applicable_samples;
  out["seed"] = r.seed;
  out["worst_margin"] = r.worst_margin;
  out["summary"] = r.summary();
  return out;
}

Json json_of(const SetReport& r) {
  Json out;
  out["diameter"] = r.diameter;
  out["chebyshev_radius"] = r.chebyshev_radius;
  out["centre_indices"] = r.centre_indices;
  out["diametral_flags"] = r.diametral_flags;
  out["radii"] = r.radii;
  Json w;
  w["index"] = optional_of(r.witness.index);
  w["point"] = r.witness.point ? json_of(*r.witness.point) : Json(nullptr);
  w["zero_diameter"] = r.witness.zero_diameter;
  out["normal_structure_witness"] = std::move(w);
  return out;
}

Json json_of(const TailReport& r) {
  Json out;
  out["verdict"] = std::string(to_string(r.verdict));
  out["first_index"] = optional_of(r.first_index);
  out["max_tail"] = r.max_tail;
  return out;
}

Json json_of(const CompletenessReport& r) {
  Json out;
  out["cauchy"] = json_of(r.cauchy);
  out["limit_candidate"] = json_of(r.candidate);
  out["tail_mean"] = json_of(r.tail_mean);
  out["in_domain"] = r.in_domain;
  out["convergence_to_candidate"] = json_of(r.convergence_to_candidate);
  return out;
}

Json json_of(const ConditionVerdict& v) {
  Json out;
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  out["terms"] = v.terms;
  out["holds"] = v.holds;
  out["margin"] = v.margin;
  return out;
}

Json json_of(const ConditionSurvey& r) {
  Json out;
  out["condition"] = std::string(to_string(r.condition));
  out["samples"] = r.samples;
  out["violations"] = r.violations;
  out["condition_pass_rate"] = r.pass_rate;
  if (r.first_violation) {
    Json w;
    w["x"] = json_of(r.first_violation->first);
    w["y"] = json_of(r.first_violation->second);
    w["verdict"] = json_of(*r.first_violation_verdict);
    out["first_violation"] = std::move(w);
  } else {
    out["first_violation"] = nullptr;
  }
  return out;
}

Json json_of(const UniquenessReport& r) {
  Json out;
  out["scan_starts"] = r.scan_starts;
  out["converged_starts"] = r.converged_starts;
  out["basin_count"] = r.basins.size();
  out["basins"] = Json::array();
  for (const auto& b : r.basins) out["basins"].push_back(json_of(b));
  out["unique"] = r.unique;
  return out;
}

Json json_of(const FixedPointResult& r) {
  Json out;
  out["fixed_point"] = json_of(r.point);
  out["residual"] = r.residual;
  out["uniqueness"] = json_of(r.uniqueness);
  out["evaluations"] = r.evaluations;
  out["method"] = r.method;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace snorm
