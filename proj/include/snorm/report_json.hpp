#ifndef SNORM_REPORT_JSON_HPP
#define SNORM_REPORT_JSON_HPP

// JSON views of reports. Keys keep insertion order so identical inputs
// serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "snorm/rhoades.hpp"
#include "snorm/sampling.hpp"
#include "snorm/sequences.hpp"
#include "snorm/setanalysis.hpp"
#include "snorm/structure.hpp"

namespace snorm {

using Json = nlohmann::ordered_json;

Json json_of(const Vector& v);
Json json_of(const Structure& s);
Json json_of(const CheckReport& r);
Json json_of(const SetReport& r);
Json json_of(const TailReport& r);
Json json_of(const CompletenessReport& r);
Json json_of(const ConditionVerdict& v);
Json json_of(const ConditionSurvey& r);
Json json_of(const UniquenessReport& r);
Json json_of(const FixedPointResult& r);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace snorm

#endif  // SNORM_REPORT_JSON_HPP
