#ifndef SNORM_SAMPLING_HPP
#define SNORM_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snorm/vector.hpp"

namespace snorm {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kAbsoluteFloor = 1e-12;

/// Where and how many random inputs a sampled check draws.
struct SampleSpec {
  Vector box_low;
  Vector box_high;
  std::size_t count = 10000;
  std::uint64_t seed = 42;
  double scalar_range = 10.0;
  /// Worker threads for sample evaluation. Results do not depend on it.
  unsigned threads = 1;

  static SampleSpec cube(std::size_t dim, double low, double high, std::size_t count = 10000,
                         std::uint64_t seed = 42);

  std::size_t dim() const { return dim_of(box_low); }

  /// Throws unless the box has dimension `dim`, low <= high and count >= 1.
  void validate(std::size_t dim) const;
};

/// One input to a property: a tuple of points and scalars.
struct Sample {
  std::vector<Vector> points;
  std::vector<double> scalars;
};

/// A named scalar recorded alongside a verdict (e.g. both sides of an
/// inequality).
using Observation = std::pair<std::string, double>;

/// Result of evaluating one property at one sample.
struct Outcome {
  /// Normalized slack; negative means the property leans towards failure.
  double slack = 0.0;
  bool violated = false;
  /// False when the sample falls outside the property's premise (e.g. an
  /// implication whose antecedent does not hold). Such samples are skipped.
  bool applicable = true;
  std::vector<Observation> values;

  /// Folds another sub-clause into this outcome.
  void merge(const Outcome& other);
};

struct Witness {
  std::vector<Vector> points;
  std::vector<double> scalars;
  std::vector<Observation> values;

  /// Looks up a recorded observation; throws InvalidArgument when absent.
  double value(std::string_view name) const;
};

enum class Verdict { Pass, Fail };

std::string_view to_string(Verdict verdict);

/// Outcome of a sampled property check. A PASS means no violation was found
/// among the samples; it is not a proof.
struct CheckReport {
  std::string property_id;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  std::size_t samples_used = 0;
  std::size_t applicable_samples = 0;
  std::uint64_t seed = 0;
  double worst_margin = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
  std::string summary() const;
};

/// A property over sampled inputs, evaluated by run_property.
struct PropertyDef {
  std::string id;
  std::size_t num_points = 0;
  std::size_t num_scalars = 0;
  /// Redraw scalars with |lambda| in {0, 1}.
  bool exclude_unit_scalars = false;
  /// Optional filter; rejected draws are redrawn from the same stream.
  std::function<bool(const Sample&)> accept;
  std::function<Outcome(const Sample&)> eval;
  /// Evaluated in order before any random sample.
  std::vector<Sample> canned;
};

/// Runs the canned samples, stopping at the first violation, then
/// spec.count random samples. Sample i is drawn from a stream keyed by
/// (seed, property id, i), so the report does not depend on spec.threads.
CheckReport run_property(const PropertyDef& property, const SampleSpec& spec);

/// The i-th random sample of a property; exposed for replay and tests.
Sample draw_sample(const PropertyDef& property, const SampleSpec& spec, std::size_t index);

/// Slack of lhs <= rhs relative to max(|lhs|, |rhs|), with an absolute floor.
Outcome le_outcome(double lhs, double rhs, double tol);

/// Slack of lhs == rhs relative to max(|lhs|, |rhs|), with an absolute floor.
Outcome eq_outcome(double lhs, double rhs, double tol);

/// value must be exactly zero.
Outcome zero_outcome(double value);

/// value must exceed tol.
Outcome positive_outcome(double value, double tol);

}  // namespace snorm

#endif  // SNORM_SAMPLING_HPP
