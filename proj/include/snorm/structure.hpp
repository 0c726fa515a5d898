#ifndef SNORM_STRUCTURE_HPP
#define SNORM_STRUCTURE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "snorm/vector.hpp"

namespace snorm {

enum class Kind { Norm, Metric, SNorm, SMetric, GNorm };

std::string_view to_string(Kind kind);

/// Parses "norm", "metric", "snorm", "smetric" or "gnorm" (case-insensitive).
Kind kind_from_string(std::string_view text);

/// Number of vector arguments an evaluator of this kind takes.
constexpr int arity(Kind kind) {
  switch (kind) {
    case Kind::Norm: return 1;
    case Kind::Metric: return 2;
    default: return 3;
  }
}

/// An immutable, evaluable generalized norm or metric on R^n.
///
/// The evaluator is fixed at construction and shared between copies, so a
/// Structure can be passed by value and used from several threads at once.
/// Every call checks that the arguments have the structure's dimension and
/// finite coordinates.
class Structure {
 public:
  using Unary = std::function<double(const Vector&)>;
  using Binary = std::function<double(const Vector&, const Vector&)>;
  using Ternary = std::function<double(const Vector&, const Vector&, const Vector&)>;

  static Structure norm(std::size_t dim, std::string name, Unary f,
                        std::vector<std::string> provenance = {});
  static Structure metric(std::size_t dim, std::string name, Binary f,
                          std::vector<std::string> provenance = {});
  /// kind must be SNorm, SMetric or GNorm.
  static Structure ternary(Kind kind, std::size_t dim, std::string name, Ternary f,
                           std::vector<std::string> provenance = {});

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& provenance() const { return provenance_; }

  double operator()(const Vector& x) const;
  double operator()(const Vector& x, const Vector& y) const;
  double operator()(const Vector& x, const Vector& y, const Vector& z) const;

  /// Same evaluator under another three-argument kind, e.g. to probe an
  /// S-norm for the G-norm axioms. Appends `step` to the provenance.
  Structure relabel(Kind kind, std::string step) const;

  /// Copy with a new name and one more provenance step.
  Structure derived(std::string name, std::string step) const;

  /// Throws KindMismatch unless kind() == expected.
  void require_kind(Kind expected, std::string_view context) const;

 private:
  using Evaluator = std::variant<Unary, Binary, Ternary>;

  Structure(Kind kind, std::size_t dim, std::string name, std::vector<std::string> provenance,
            std::shared_ptr<const Evaluator> eval);

  Kind kind_;
  std::size_t dim_;
  std::string name_;
  std::vector<std::string> provenance_;
  std::shared_ptr<const Evaluator> eval_;
};

/// ||x,y,z|| = |x| + |y| + |z|, |.| Euclidean.
Structure make_sum_abs_snorm(std::size_t dim);

/// ||x,y,z|| = |x-2y-2z| + |y-2x-2z| + |z-2y-2x|, |.| Euclidean.
Structure make_example6_snorm(std::size_t dim);

/// 0 when x, y and z are bitwise equal, 1 otherwise.
Structure make_discrete_smetric(std::size_t dim);

Structure make_euclidean_norm(std::size_t dim);

/// d(x,y) = ||x - y||.
Structure make_metric_from_norm(const Structure& norm);

/// ||x|| + ||y|| + ||z|| over the Euclidean norm, tagged as a G-norm.
Structure make_additive_gnorm(std::size_t dim);

}  // namespace snorm

#endif  // SNORM_STRUCTURE_HPP
