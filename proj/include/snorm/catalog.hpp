#ifndef SNORM_CATALOG_HPP
#define SNORM_CATALOG_HPP

// Stable string ids for the canonical structures, of the form
// "<kind>.<name>.d<dim>", e.g. "snorm.sum_abs.d2" or "smetric.discrete.d1".

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "snorm/structure.hpp"

namespace snorm {

inline constexpr std::size_t kMaxCatalogDim = 16;

/// Resolves an id; throws UnknownId for an unknown name or a dimension
/// outside 1..kMaxCatalogDim.
Structure lookup(std::string_view id);

/// Every catalog id for dimensions 1..max_dim, in a fixed order.
std::vector<std::string> catalog_ids(std::size_t max_dim = 3);

/// Ids of the S-metrics obtained from an S-norm or a metric by a generator.
std::vector<std::string> generated_smetric_ids(std::size_t max_dim = 3);

}  // namespace snorm

#endif  // SNORM_CATALOG_HPP
