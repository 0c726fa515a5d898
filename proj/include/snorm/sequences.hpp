#ifndef SNORM_SEQUENCES_HPP
#define SNORM_SEQUENCES_HPP

// Finite-horizon convergence and Cauchy analysis in an S-normed space.
//
// Limits cannot be decided from finitely many terms, so verdicts are HOLDS
// (the defining inequality holds on the whole checked tail) or INCONCLUSIVE.
// A tail must cover at least the second half of the horizon to count.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snorm/structure.hpp"

namespace snorm {

struct SequenceSpec {
  /// Term x_n for n >= 1.
  std::function<Vector(std::size_t)> generator;
  /// Membership in the ambient set X.
  std::function<bool(const Vector&)> domain;
  std::size_t horizon = 10000;
  double eps = 1e-3;
};

enum class TailVerdict { Holds, Inconclusive };

std::string_view to_string(TailVerdict verdict);

struct TailReport {
  TailVerdict verdict = TailVerdict::Inconclusive;
  /// Smallest n0 for which the tail inequality holds (set when HOLDS).
  std::optional<std::size_t> first_index;
  /// Largest value seen on the second half of the horizon.
  double max_tail = 0.0;
};

/// HOLDS(n0) when ||0, x_n - x, x - x_n|| < eps for every n in [n0, horizon].
TailReport check_convergence(const SequenceSpec& seq, const Vector& limit, const Structure& s);

/// HOLDS(n0) when ||x_n - x_m, x_m - x_l, x_l - x_n|| < eps for all n, m, l
/// drawn from a logarithmic grid of [n0, horizon] that always includes n0 and
/// the horizon. `grid_size` is the number of log-spaced grid points; each is
/// joined by its two successors so short-period oscillation is not aliased.
TailReport check_cauchy(const SequenceSpec& seq, const Structure& s, std::size_t grid_size = 16);

struct CompletenessReport {
  TailReport cauchy;
  /// Richardson extrapolation 2 x_{2k} - x_k with 2k the largest even index
  /// in the horizon; exact for c + v/n.
  Vector candidate;
  /// Mean of the terms on the second half of the horizon.
  Vector tail_mean;
  bool in_domain = false;
  /// Convergence check of the sequence towards the candidate.
  TailReport convergence_to_candidate;
};

/// Cauchy verdict plus a numeric limit candidate and whether it lies in X.
/// A Cauchy sequence whose candidate falls outside X is evidence that X is
/// not complete.
CompletenessReport classify_completeness_witness(const SequenceSpec& seq, const Structure& s);

struct NamedSequence {
  std::string id;
  SequenceSpec spec;
  /// Known limit in R^n, when there is one.
  std::optional<Vector> limit;
};

/// Built-in sequences addressable by id: "inv_n" (1/n on (0,1)),
/// "inv_n_closed" (1/n on [0,1]), "inv_n_sq", "geometric_half", "constant",
/// "alternating" ((-1)^n), "linear" (n), "spiral" (2-D, radius 0.9^n).
/// Dimension follows the id; 1-D unless stated.
std::vector<NamedSequence> builtin_sequences(std::size_t horizon = 10000, double eps = 1e-3);

/// Twenty sequences (geometric, 1/n, 1/n^2, constants, in dimensions 1..3)
/// with known limits, used for the convergent-implies-Cauchy property.
std::vector<NamedSequence> convergent_suite(std::size_t horizon = 10000, double eps = 1e-3);

/// Throws UnknownId.
NamedSequence builtin_sequence(const std::string& id, std::size_t horizon, double eps);

/// Values ||0, x_n - x, x - x_n|| for n = 1..horizon.
std::vector<double> tail_values(const SequenceSpec& seq, const Vector& limit, const Structure& s);

}  // namespace snorm

#endif  // SNORM_SEQUENCES_HPP
