#include "snorm/catalog.hpp"

#include <array>
#include <charconv>
#include <functional>

#include "snorm/error.hpp"
#include "snorm/generators.hpp"

namespace snorm {

namespace {

struct Entry {
  std::string_view stem;  // "<kind>.<name>"
  bool generated_smetric;
  std::function<Structure(std::size_t)> build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {"norm.euclidean", false, make_euclidean_norm},
      {"metric.euclidean", false,
       [](std::size_t d) { return make_metric_from_norm(make_euclidean_norm(d)); }},
      {"snorm.sum_abs", false, make_sum_abs_snorm},
      {"snorm.example6", false, make_example6_snorm},
      {"snorm.from_euclidean", false,
       [](std::size_t d) { return snorm_from_norm(make_euclidean_norm(d)); }},
      {"smetric.discrete", false, make_discrete_smetric},
      {"smetric.from_sum_abs", true,
       [](std::size_t d) { return smetric_from_snorm(make_sum_abs_snorm(d)); }},
      {"smetric.from_example6", true,
       [](std::size_t d) { return smetric_from_snorm(make_example6_snorm(d)); }},
      {"smetric.from_euclidean", true,
       [](std::size_t d) { return smetric_from_snorm(snorm_from_norm(make_euclidean_norm(d))); }},
      {"smetric.from_euclidean_metric", true,
       [](std::size_t d) {
         return smetric_from_metric(make_metric_from_norm(make_euclidean_norm(d)));
       }},
      {"norm.from_sum_abs", false,
       [](std::size_t d) { return norm_from_snorm(make_sum_abs_snorm(d)); }},
      {"norm.from_example6", false,
       [](std::size_t d) { return norm_from_snorm(make_example6_snorm(d)); }},
      {"gnorm.additive", false, make_additive_gnorm},
  };
  return table;
}

}  // namespace

Structure lookup(std::string_view id) {
  const auto dot = id.rfind(".d");
  if (dot == std::string_view::npos) {
    throw UnknownId("malformed structure id '" + std::string(id) + "' (expected <kind>.<name>.d<n>)");
  }
  const std::string_view stem = id.substr(0, dot);
  const std::string_view digits = id.substr(dot + 2);
  std::size_t dim = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw UnknownId("malformed dimension in structure id '" + std::string(id) + "'");
  }
  if (dim < 1 || dim > kMaxCatalogDim) {
    throw UnknownId("dimension out of range in structure id '" + std::string(id) + "'");
  }
  for (const auto& e : entries()) {
    if (e.stem == stem) return e.build(dim).derived(std::string(id), "catalog:" + std::string(id));
  }
  throw UnknownId("unknown structure id '" + std::string(id) + "'");
}

std::vector<std::string> catalog_ids(std::size_t max_dim) {
  std::vector<std::string> ids;
  for (const auto& e : entries()) {
    for (std::size_t d = 1; d <= max_dim; ++d) ids.push_back(std::string(e.stem) + ".d" + std::to_string(d));
  }
  return ids;
}

std::vector<std::string> generated_smetric_ids(std::size_t max_dim) {
  std::vector<std::string> ids;
  for (const auto& e : entries()) {
    if (!e.generated_smetric) continue;
    for (std::size_t d = 1; d <= max_dim; ++d) ids.push_back(std::string(e.stem) + ".d" + std::to_string(d));
  }
  return ids;
}

}  // namespace snorm
