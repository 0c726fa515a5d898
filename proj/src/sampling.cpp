#include "snorm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <thread>

#include "snorm/error.hpp"

namespace snorm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Maps 53 random bits to [0, 1). std::uniform_real_distribution is
// implementation-defined, which would tie reports to one standard library.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double scale_of(double a, double b, double tol) {
  return std::max({std::abs(a), std::abs(b), kAbsoluteFloor / tol});
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("tolerance must be positive");
}

struct Partial {
  std::optional<std::size_t> first_violation;
  double worst = std::numeric_limits<double>::infinity();
  std::size_t applicable = 0;
};

Partial evaluate_range(const PropertyDef& property, const SampleSpec& spec, std::size_t begin,
                       std::size_t end) {
  Partial p;
  for (std::size_t i = begin; i < end; ++i) {
    const Outcome out = property.eval(draw_sample(property, spec, i));
    if (!out.applicable) continue;
    ++p.applicable;
    p.worst = std::min(p.worst, out.slack);
    if (out.violated && !p.first_violation) p.first_violation = i;
  }
  return p;
}

Witness make_witness(const Sample& sample, const Outcome& out) {
  return Witness{sample.points, sample.scalars, out.values};
}

}  // namespace

SampleSpec SampleSpec::cube(std::size_t dim, double low, double high, std::size_t count,
                            std::uint64_t seed) {
  if (dim == 0) throw InvalidDimension("sampling box needs dimension >= 1");
  SampleSpec spec;
  spec.box_low = Vector::Constant(static_cast<Eigen::Index>(dim), low);
  spec.box_high = Vector::Constant(static_cast<Eigen::Index>(dim), high);
  spec.count = count;
  spec.seed = seed;
  return spec;
}

void SampleSpec::validate(std::size_t dim) const {
  require_point(box_low, dim, "box_low");
  require_point(box_high, dim, "box_high");
  if ((box_low.array() > box_high.array()).any()) {
    throw InvalidArgument("sampling box: low must not exceed high");
  }
  if (count < 1) throw InvalidArgument("sample count must be at least 1");
  if (!(scalar_range >= 0.0) || !std::isfinite(scalar_range)) {
    throw InvalidArgument("scalar range must be finite and non-negative");
  }
}

void Outcome::merge(const Outcome& other) {
  slack = std::min(slack, other.slack);
  violated = violated || other.violated;
  applicable = applicable && other.applicable;
  values.insert(values.end(), other.values.begin(), other.values.end());
}

double Witness::value(std::string_view name) const {
  for (const auto& [key, v] : values) {
    if (key == name) return v;
  }
  throw InvalidArgument("witness has no observation named '" + std::string(name) + "'");
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Pass ? "PASS" : "FAIL";
}

std::string CheckReport::summary() const {
  if (passed()) {
    return "no violation found in " + std::to_string(samples_used) + " samples";
  }
  return "violated; witness recorded after " + std::to_string(samples_used) + " samples";
}

Outcome le_outcome(double lhs, double rhs, double tol) {
  require_tol(tol);
  Outcome out;
  out.slack = (rhs - lhs) / scale_of(lhs, rhs, tol);
  out.violated = !std::isfinite(lhs) || !std::isfinite(rhs) || out.slack < -tol;
  out.values = {{"lhs", lhs}, {"rhs", rhs}};
  return out;
}

Outcome eq_outcome(double lhs, double rhs, double tol) {
  require_tol(tol);
  Outcome out;
  out.slack = -std::abs(lhs - rhs) / scale_of(lhs, rhs, tol);
  out.violated = !std::isfinite(lhs) || !std::isfinite(rhs) || out.slack < -tol;
  out.values = {{"lhs", lhs}, {"rhs", rhs}};
  return out;
}

Outcome zero_outcome(double value) {
  Outcome out;
  out.slack = -std::abs(value);
  out.violated = value != 0.0;
  out.values = {{"value", value}};
  return out;
}

Outcome positive_outcome(double value, double tol) {
  Outcome out;
  out.slack = value - tol;
  out.violated = !(value > tol);
  out.values = {{"value", value}};
  return out;
}

Sample draw_sample(const PropertyDef& property, const SampleSpec& spec, std::size_t index) {
  const std::uint64_t key =
      splitmix64(spec.seed ^ splitmix64(fnv1a(property.id) + splitmix64(index)));
  std::mt19937_64 rng(key);
  const auto dim = spec.box_low.size();
  const Vector width = spec.box_high - spec.box_low;

  constexpr int kMaxRedraws = 1000;
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Sample s;
    s.points.reserve(property.num_points);
    for (std::size_t p = 0; p < property.num_points; ++p) {
      Vector v(dim);
      for (Eigen::Index k = 0; k < dim; ++k) {
        v(k) = spec.box_low(k) + width(k) * unit_interval(rng);
      }
      s.points.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < property.num_scalars; ++k) {
      double lambda = 0.0;
      do {
        lambda = spec.scalar_range * (2.0 * unit_interval(rng) - 1.0);
      } while (property.exclude_unit_scalars && spec.scalar_range > 1.0 &&
               (std::abs(lambda) == 0.0 || std::abs(lambda) == 1.0));
      s.scalars.push_back(lambda);
    }
    if (!property.accept || property.accept(s)) return s;
  }
  throw InvalidArgument(property.id + ": sample filter rejected " + std::to_string(kMaxRedraws) +
                        " consecutive draws");
}

CheckReport run_property(const PropertyDef& property, const SampleSpec& spec) {
  CheckReport report;
  report.property_id = property.id;
  report.seed = spec.seed;
  double worst = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < property.canned.size(); ++i) {
    const Outcome out = property.eval(property.canned[i]);
    report.samples_used = i + 1;
    if (!out.applicable) continue;
    ++report.applicable_samples;
    worst = std::min(worst, out.slack);
    if (out.violated) {
      report.verdict = Verdict::Fail;
      report.witness = make_witness(property.canned[i], out);
      report.worst_margin = worst;
      return report;
    }
  }

  const unsigned threads = std::max(1U, std::min<unsigned>(spec.threads, 64U));
  const std::size_t n = spec.count;
  std::vector<Partial> partials(threads);
  if (threads == 1) {
    partials[0] = evaluate_range(property, spec, 0, n);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(n, t * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          partials[t] = evaluate_range(property, spec, begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::optional<std::size_t> first;
  for (const auto& p : partials) {
    worst = std::min(worst, p.worst);
    report.applicable_samples += p.applicable;
    if (!first && p.first_violation) first = p.first_violation;
  }
  report.samples_used = property.canned.size() + n;
  report.worst_margin = std::isfinite(worst) ? worst : 0.0;
  if (first) {
    const Sample s = draw_sample(property, spec, *first);
    report.verdict = Verdict::Fail;
    report.witness = make_witness(s, property.eval(s));
  }
  return report;
}

}  // namespace snorm
