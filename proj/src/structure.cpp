#include "snorm/structure.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "snorm/error.hpp"
#include "snorm/kernels.hpp"

namespace snorm {

void require_point(const Vector& v, std::size_t dim, const char* what) {
  if (dim_of(v) != dim) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim) +
                            ", got " + std::to_string(v.size()));
  }
  if (!all_finite(v)) throw NonFinite(std::string(what) + ": non-finite coordinate");
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Norm: return "NORM";
    case Kind::Metric: return "METRIC";
    case Kind::SNorm: return "SNORM";
    case Kind::SMetric: return "SMETRIC";
    case Kind::GNorm: return "GNORM";
  }
  return "UNKNOWN";
}

Kind kind_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "norm") return Kind::Norm;
  if (lower == "metric") return Kind::Metric;
  if (lower == "snorm") return Kind::SNorm;
  if (lower == "smetric") return Kind::SMetric;
  if (lower == "gnorm") return Kind::GNorm;
  throw UnknownId("unknown structure kind '" + std::string(text) + "'");
}

namespace {

void require_valid_dim(std::size_t dim) {
  if (dim == 0) throw InvalidDimension("dimension must be at least 1");
}

}  // namespace

Structure::Structure(Kind kind, std::size_t dim, std::string name,
                     std::vector<std::string> provenance, std::shared_ptr<const Evaluator> eval)
    : kind_(kind),
      dim_(dim),
      name_(std::move(name)),
      provenance_(std::move(provenance)),
      eval_(std::move(eval)) {
  require_valid_dim(dim_);
}

Structure Structure::norm(std::size_t dim, std::string name, Unary f,
                          std::vector<std::string> provenance) {
  return Structure(Kind::Norm, dim, std::move(name), std::move(provenance),
                   std::make_shared<const Evaluator>(std::move(f)));
}

Structure Structure::metric(std::size_t dim, std::string name, Binary f,
                            std::vector<std::string> provenance) {
  return Structure(Kind::Metric, dim, std::move(name), std::move(provenance),
                   std::make_shared<const Evaluator>(std::move(f)));
}

Structure Structure::ternary(Kind kind, std::size_t dim, std::string name, Ternary f,
                             std::vector<std::string> provenance) {
  if (arity(kind) != 3) {
    throw KindMismatch("ternary evaluator cannot back a " + std::string(to_string(kind)));
  }
  return Structure(kind, dim, std::move(name), std::move(provenance),
                   std::make_shared<const Evaluator>(std::move(f)));
}

double Structure::operator()(const Vector& x) const {
  const auto* f = std::get_if<Unary>(eval_.get());
  if (f == nullptr) throw KindMismatch(name_ + " is not a one-argument structure");
  require_point(x, dim_, "x");
  return (*f)(x);
}

double Structure::operator()(const Vector& x, const Vector& y) const {
  const auto* f = std::get_if<Binary>(eval_.get());
  if (f == nullptr) throw KindMismatch(name_ + " is not a two-argument structure");
  require_point(x, dim_, "x");
  require_point(y, dim_, "y");
  return (*f)(x, y);
}

double Structure::operator()(const Vector& x, const Vector& y, const Vector& z) const {
  const auto* f = std::get_if<Ternary>(eval_.get());
  if (f == nullptr) throw KindMismatch(name_ + " is not a three-argument structure");
  require_point(x, dim_, "x");
  require_point(y, dim_, "y");
  require_point(z, dim_, "z");
  return (*f)(x, y, z);
}

Structure Structure::relabel(Kind kind, std::string step) const {
  if (arity(kind) != arity(kind_)) {
    throw KindMismatch("cannot relabel " + std::string(to_string(kind_)) + " as " +
                       std::string(to_string(kind)));
  }
  auto prov = provenance_;
  prov.push_back(std::move(step));
  return Structure(kind, dim_, name_, std::move(prov), eval_);
}

Structure Structure::derived(std::string name, std::string step) const {
  auto prov = provenance_;
  prov.push_back(std::move(step));
  return Structure(kind_, dim_, std::move(name), std::move(prov), eval_);
}

void Structure::require_kind(Kind expected, std::string_view context) const {
  if (kind_ != expected) {
    throw KindMismatch(std::string(context) + ": expected " + std::string(to_string(expected)) +
                       ", got " + std::string(to_string(kind_)) + " (" + name_ + ")");
  }
}

Structure make_sum_abs_snorm(std::size_t dim) {
  require_valid_dim(dim);
  return Structure::ternary(
      Kind::SNorm, dim, "sum_abs",
      [](const Vector& x, const Vector& y, const Vector& z) { return kernels::sum_abs(x, y, z); },
      {"make_sum_abs_snorm"});
}

Structure make_example6_snorm(std::size_t dim) {
  require_valid_dim(dim);
  return Structure::ternary(
      Kind::SNorm, dim, "example6",
      [](const Vector& x, const Vector& y, const Vector& z) { return kernels::example6(x, y, z); },
      {"make_example6_snorm"});
}

Structure make_discrete_smetric(std::size_t dim) {
  require_valid_dim(dim);
  return Structure::ternary(
      Kind::SMetric, dim, "discrete",
      [](const Vector& x, const Vector& y, const Vector& z) {
        return exactly_equal(x, y) && exactly_equal(y, z) ? 0.0 : 1.0;
      },
      {"make_discrete_smetric"});
}

Structure make_euclidean_norm(std::size_t dim) {
  require_valid_dim(dim);
  return Structure::norm(
      dim, "euclidean", [](const Vector& x) { return kernels::euclidean(x); },
      {"make_euclidean_norm"});
}

Structure make_metric_from_norm(const Structure& norm) {
  norm.require_kind(Kind::Norm, "make_metric_from_norm");
  auto prov = norm.provenance();
  prov.emplace_back("make_metric_from_norm");
  return Structure::metric(
      norm.dim(), "metric(" + norm.name() + ")",
      [norm](const Vector& x, const Vector& y) { return norm(x - y); }, std::move(prov));
}

Structure make_additive_gnorm(std::size_t dim) {
  require_valid_dim(dim);
  return Structure::ternary(
      Kind::GNorm, dim, "additive",
      [](const Vector& x, const Vector& y, const Vector& z) { return kernels::sum_abs(x, y, z); },
      {"make_additive_gnorm"});
}

}  // namespace snorm
