#ifndef SNORM_RHOADES_HPP
#define SNORM_RHOADES_HPP

// Rhoades-type contractive conditions and a numerical fixed-point locator.
//
// Each condition compares a displacement with the maximum of five reference
// quantities for a pair x != y:
//
//   NS25  ||0,Tx-Ty,Ty-Tx||   vs  ||0,x-y,y-x||, ||0,Tx-x,x-Tx||, ||0,Ty-y,y-Ty||,
//                                 ||0,Ty-x,x-Ty||, ||0,Tx-y,y-Tx||
//   S25   S(Tx,Tx,Ty)         vs  S(x,x,y), S(Tx,Tx,x), S(Ty,Ty,y), S(Ty,Ty,x), S(Tx,Tx,y)
//   NR25  ||Tx-Ty||           vs  ||x-y||, ||x-Tx||, ||y-Ty||, ||x-Ty||, ||y-Tx||
//   R25   d(Tx,Ty)            vs  d(x,y), d(x,Tx), d(y,Ty), d(x,Ty), d(y,Tx)
//
// and holds iff the displacement is strictly smaller (exact comparison).

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snorm/error.hpp"
#include "snorm/sampling.hpp"
#include "snorm/structure.hpp"

namespace snorm {

/// A map T on the closed box [low, high].
struct SelfMap {
  std::function<Vector(const Vector&)> map;
  Vector domain_low;
  Vector domain_high;
  std::string name;

  std::size_t dim() const { return dim_of(domain_low); }
  bool in_domain(const Vector& x) const;
  Vector operator()(const Vector& x) const { return map(x); }
};

/// Built-in maps on R^dim: "half" (x/2 on [-1,1]^n), "shifted_half"
/// ((x+0.5)/2 on [-1,1]^n), "cosine" (componentwise cos on [0,1]^n),
/// "identity" and "negation" (on [-1,1]^n), "half_sine" (x/2 + 0.1 sin x on
/// [-1,1]^n). Throws UnknownId.
SelfMap builtin_map(std::string_view id, std::size_t dim);

std::vector<std::string> builtin_map_ids();

class NotASelfMap : public Error {
 public:
  NotASelfMap(const std::string& what, Vector x) : Error(what), witness_(std::move(x)) {}
  const Vector& witness() const { return witness_; }

 private:
  Vector witness_;
};

/// Samples `samples` points (plus the box corners when dim <= 10) and throws
/// NotASelfMap with the first point whose image leaves the box.
void check_self_map(const SelfMap& t, std::size_t samples = 256, std::uint64_t seed = 42);

class ExcludedPair : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

enum class Condition { NS25, S25, NR25, R25 };

std::string_view to_string(Condition c);
Condition condition_from_string(std::string_view text);

/// Kind of structure each condition is measured with.
Kind structure_kind(Condition c);

struct ConditionVerdict {
  double lhs = 0.0;
  double rhs = 0.0;
  std::array<double, 5> terms{};
  bool holds = false;
  double margin = 0.0;
};

/// Pre: x != y exactly (else ExcludedPair) and both in the domain of T (else
/// OutOfDomain).
ConditionVerdict ns25_at(const SelfMap& t, const Structure& s, const Vector& x, const Vector& y);
ConditionVerdict s25_at(const SelfMap& t, const Structure& m, const Vector& x, const Vector& y);
ConditionVerdict nr25_at(const SelfMap& t, const Structure& n, const Vector& x, const Vector& y);
ConditionVerdict r25_at(const SelfMap& t, const Structure& d, const Vector& x, const Vector& y);

ConditionVerdict condition_at(Condition c, const SelfMap& t, const Structure& s, const Vector& x,
                              const Vector& y);

/// Sampled pairs x != y from spec's box, which must lie inside T's domain.
struct ConditionSurvey {
  Condition condition = Condition::NS25;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double pass_rate = 0.0;
  std::optional<std::pair<Vector, Vector>> first_violation;
  std::optional<ConditionVerdict> first_violation_verdict;
};

ConditionSurvey survey_condition(Condition c, const SelfMap& t, const Structure& s,
                                 const SampleSpec& spec);

/// Over sampled pairs where NS25 holds under s, S25 must hold under the
/// S-metric generated by s. FAIL would carry the pair as witness.
CheckReport check_prop7(const SelfMap& t, const Structure& s, const SampleSpec& spec);

/// Over sampled pairs where NR25 holds under n, NS25 must hold under the
/// S-norm generated by n.
CheckReport check_prop8(const SelfMap& t, const Structure& n, const SampleSpec& spec);

/// Sample spec over T's whole domain.
SampleSpec domain_spec(const SelfMap& t, std::size_t count = 10000, std::uint64_t seed = 42);

struct FixedPointConfig {
  std::size_t starts = 16;
  std::size_t grid_per_axis = 33;
  std::size_t grid_cap = 100000;
  std::size_t keep_best = 4;
  std::size_t refine_depth = 6;
  std::size_t refine_per_axis = 9;
  /// Iterations of T per start before giving up on that start.
  std::size_t max_iterations = 2000;
  std::size_t scan_per_axis = 9;
  std::size_t self_map_samples = 256;
  std::uint64_t seed = 42;
};

struct UniquenessReport {
  std::size_t scan_starts = 0;
  std::size_t converged_starts = 0;
  /// Clusters of converged points separated by more than 10 * tol.
  std::vector<Vector> basins;
  bool unique = false;
};

struct FixedPointResult {
  Vector point;
  double residual = 0.0;
  UniquenessReport uniqueness;
  std::size_t evaluations = 0;
  /// "iteration", "grid" or "refinement": the stage that produced the point.
  std::string method;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, Vector best, double residual)
      : Error(what), best_(std::move(best)), residual_(residual) {}
  const Vector& best() const { return best_; }
  double residual() const { return residual_; }

 private:
  Vector best_;
  double residual_;
};

/// ||0, Tx - x, x - Tx||.
double fixed_point_residual(const SelfMap& t, const Structure& s, const Vector& x);

/// Numerical demonstration of a unique fixed point. Multi-start iteration of
/// T, a coarse grid over the domain, and local grid refinement around the k
/// best candidates; the best residual wins, ties broken by lexicographic
/// point order. A final scan iterates T from a grid of starts and clusters
/// the converged points into basins. Throws NoConvergence (carrying the best
/// candidate) when no point reaches residual <= tol within `budget` map
/// evaluations.
FixedPointResult find_fixed_point(const SelfMap& t, const Structure& s, double tol,
                                  std::size_t budget = 1000000, const FixedPointConfig& config = {});

/// Residual over a regular grid of the domain (1-D and 2-D only).
std::vector<std::pair<Vector, double>> residual_landscape(const SelfMap& t, const Structure& s,
                                                          std::size_t per_axis);

}  // namespace snorm

#endif  // SNORM_RHOADES_HPP
