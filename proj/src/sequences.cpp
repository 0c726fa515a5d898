#include "snorm/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "snorm/error.hpp"

namespace snorm {

namespace {

void require_horizon(const SequenceSpec& seq) {
  if (seq.horizon < 2) throw InvalidArgument("sequence horizon must be at least 2");
  if (!(seq.eps > 0.0)) throw InvalidArgument("eps must be positive");
  if (!seq.generator) throw InvalidArgument("sequence has no generator");
}

std::vector<Vector> terms_of(const SequenceSpec& seq, std::size_t dim) {
  std::vector<Vector> terms;
  terms.reserve(seq.horizon + 1);
  terms.emplace_back(Vector::Zero(static_cast<Eigen::Index>(dim)));  // index 0 unused
  for (std::size_t n = 1; n <= seq.horizon; ++n) {
    Vector x = seq.generator(n);
    require_point(x, dim, "sequence term");
    terms.push_back(std::move(x));
  }
  return terms;
}

/// Log-spaced indices in [1, horizon], each followed by its next two
/// neighbours so that period-2 and period-3 oscillations are sampled.
std::vector<std::size_t> log_grid(std::size_t horizon, std::size_t points) {
  std::vector<std::size_t> grid;
  const double top = std::log(static_cast<double>(horizon));
  auto add = [&](std::size_t n) {
    for (std::size_t k = n; k <= std::min(n + 2, horizon); ++k) grid.push_back(k);
  };
  add(1);
  add(horizon / 2);
  grid.push_back(horizon);
  for (std::size_t k = 0; k < points; ++k) {
    const double t = points > 1 ? static_cast<double>(k) / static_cast<double>(points - 1) : 1.0;
    add(static_cast<std::size_t>(std::llround(std::exp(t * top))));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  grid.erase(std::remove(grid.begin(), grid.end(), std::size_t{0}), grid.end());
  return grid;
}

double triple_value(const Structure& s, const Vector& xn, const Vector& xm, const Vector& xl) {
  return s(xn - xm, xm - xl, xl - xn);
}

}  // namespace

std::string_view to_string(TailVerdict verdict) {
  return verdict == TailVerdict::Holds ? "HOLDS" : "INCONCLUSIVE";
}

std::vector<double> tail_values(const SequenceSpec& seq, const Vector& limit, const Structure& s) {
  s.require_kind(Kind::SNorm, "tail_values");
  require_horizon(seq);
  require_point(limit, s.dim(), "limit");
  const Vector origin = Vector::Zero(limit.size());
  std::vector<double> values;
  values.reserve(seq.horizon);
  for (std::size_t n = 1; n <= seq.horizon; ++n) {
    const Vector x = seq.generator(n);
    values.push_back(s(origin, x - limit, limit - x));
  }
  return values;
}

TailReport check_convergence(const SequenceSpec& seq, const Vector& limit, const Structure& s) {
  const auto values = tail_values(seq, limit, s);
  const std::size_t horizon = seq.horizon;
  TailReport r;
  r.max_tail = *std::max_element(values.begin() + static_cast<std::ptrdiff_t>(horizon / 2 - 1),
                                 values.end());
  std::size_t n0 = horizon + 1;
  while (n0 > 1 && values[n0 - 2] < seq.eps) --n0;
  if (n0 <= horizon / 2) {
    r.verdict = TailVerdict::Holds;
    r.first_index = n0;
  }
  return r;
}

TailReport check_cauchy(const SequenceSpec& seq, const Structure& s, std::size_t grid_size) {
  s.require_kind(Kind::SNorm, "check_cauchy");
  require_horizon(seq);
  const std::size_t horizon = seq.horizon;
  const auto terms = terms_of(seq, s.dim());
  const auto grid = log_grid(horizon, std::max<std::size_t>(grid_size, 2));

  auto worst_from = [&](std::size_t n0) {
    std::vector<std::size_t> idx{n0};
    for (std::size_t g : grid) {
      if (g > n0) idx.push_back(g);
    }
    double worst = 0.0;
    for (std::size_t n : idx) {
      for (std::size_t m : idx) {
        for (std::size_t l : idx) {
          worst = std::max(worst, triple_value(s, terms[n], terms[m], terms[l]));
        }
      }
    }
    return worst;
  };
  auto passes = [&](std::size_t n0) { return worst_from(n0) < seq.eps; };

  TailReport r;
  const std::size_t half = horizon / 2;
  r.max_tail = worst_from(half);

  std::size_t previous = 0;  // last candidate that failed; 0 = none
  for (std::size_t c : grid) {
    if (c > half) break;
    if (passes(c)) {
      // passes(c) and !passes(previous): bisect down to the first passing index.
      std::size_t lo = previous;
      std::size_t hi = c;
      while (lo != 0 && hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        (passes(mid) ? hi : lo) = mid;
      }
      r.verdict = TailVerdict::Holds;
      r.first_index = hi;
      return r;
    }
    previous = c;
  }
  return r;
}

CompletenessReport classify_completeness_witness(const SequenceSpec& seq, const Structure& s) {
  s.require_kind(Kind::SNorm, "classify_completeness_witness");
  require_horizon(seq);
  if (!seq.domain) throw InvalidArgument("completeness check needs a domain predicate");
  CompletenessReport r;
  r.cauchy = check_cauchy(seq, s);

  const std::size_t k = seq.horizon / 2;
  const Vector xk = seq.generator(k);
  const Vector x2k = seq.generator(2 * k);
  r.candidate = 2.0 * x2k - xk;

  Vector sum = Vector::Zero(static_cast<Eigen::Index>(s.dim()));
  std::size_t count = 0;
  for (std::size_t n = k; n <= seq.horizon; ++n, ++count) sum += seq.generator(n);
  r.tail_mean = sum / static_cast<double>(count);

  r.in_domain = seq.domain(r.candidate);
  r.convergence_to_candidate = check_convergence(seq, r.candidate, s);
  return r;
}

namespace {

NamedSequence scalar_sequence(std::string id, std::function<double(double)> f,
                              std::function<bool(double)> in_x, std::optional<double> limit,
                              std::size_t horizon, double eps) {
  SequenceSpec spec;
  spec.generator = [f](std::size_t n) { return vec({f(static_cast<double>(n))}); };
  spec.domain = [in_x](const Vector& v) { return in_x(v(0)); };
  spec.horizon = horizon;
  spec.eps = eps;
  std::optional<Vector> lim;
  if (limit) lim = vec({*limit});
  return {std::move(id), std::move(spec), std::move(lim)};
}

NamedSequence vector_sequence(std::string id, std::function<Vector(double)> f,
                              std::optional<Vector> limit, std::size_t horizon, double eps) {
  SequenceSpec spec;
  spec.generator = [f](std::size_t n) { return f(static_cast<double>(n)); };
  spec.domain = [](const Vector&) { return true; };
  spec.horizon = horizon;
  spec.eps = eps;
  return {std::move(id), std::move(spec), std::move(limit)};
}

bool anywhere(double) { return true; }

}  // namespace

std::vector<NamedSequence> builtin_sequences(std::size_t horizon, double eps) {
  auto open_unit = [](double v) { return v > 0.0 && v < 1.0; };
  auto closed_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  std::vector<NamedSequence> out;
  out.push_back(scalar_sequence("inv_n", [](double n) { return 1.0 / n; }, open_unit, 0.0, horizon, eps));
  out.push_back(
      scalar_sequence("inv_n_closed", [](double n) { return 1.0 / n; }, closed_unit, 0.0, horizon, eps));
  out.push_back(
      scalar_sequence("inv_n_sq", [](double n) { return 1.0 / (n * n); }, anywhere, 0.0, horizon, eps));
  out.push_back(scalar_sequence("geometric_half", [](double n) { return std::pow(0.5, n); }, anywhere,
                                0.0, horizon, eps));
  out.push_back(scalar_sequence("constant", [](double) { return 0.25; }, open_unit, 0.25, horizon, eps));
  out.push_back(scalar_sequence("alternating", [](double n) { return std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0; },
                                anywhere, std::nullopt, horizon, eps));
  out.push_back(scalar_sequence("linear", [](double n) { return n; }, anywhere, std::nullopt, horizon, eps));
  out.push_back(vector_sequence(
      "spiral",
      [](double n) {
        const double r = std::pow(0.9, n);
        return vec({r * std::cos(n), r * std::sin(n)});
      },
      vec({0.0, 0.0}), horizon, eps));
  return out;
}

NamedSequence builtin_sequence(const std::string& id, std::size_t horizon, double eps) {
  for (auto& s : builtin_sequences(horizon, eps)) {
    if (s.id == id) return s;
  }
  throw UnknownId("unknown sequence id '" + id + "'");
}

std::vector<NamedSequence> convergent_suite(std::size_t horizon, double eps) {
  std::vector<NamedSequence> out;
  auto scalar = [&](std::string id, std::function<double(double)> f, double limit) {
    out.push_back(scalar_sequence(std::move(id), std::move(f), anywhere, limit, horizon, eps));
  };
  auto vector_of = [&](std::string id, std::function<Vector(double)> f, Vector limit) {
    out.push_back(vector_sequence(std::move(id), std::move(f), std::move(limit), horizon, eps));
  };

  for (const auto& [name, r] : {std::pair{"0.5", 0.5}, std::pair{"-0.5", -0.5},
                                 std::pair{"0.9", 0.9}, std::pair{"0.99", 0.99}}) {
    scalar(std::string("geometric(") + name + ")", [r = r](double n) { return std::pow(r, n); }, 0.0);
  }
  scalar("inv_n", [](double n) { return 1.0 / n; }, 0.0);
  scalar("0.3+inv_n", [](double n) { return 0.3 + 1.0 / n; }, 0.3);
  scalar("-2+5/n", [](double n) { return -2.0 + 5.0 / n; }, -2.0);
  scalar("inv_n_sq", [](double n) { return 1.0 / (n * n); }, 0.0);
  scalar("1-3/n^2", [](double n) { return 1.0 - 3.0 / (n * n); }, 1.0);
  scalar("const(0)", [](double) { return 0.0; }, 0.0);
  scalar("const(0.25)", [](double) { return 0.25; }, 0.25);
  scalar("const(-7)", [](double) { return -7.0; }, -7.0);
  scalar("1+inv_sqrt_n", [](double n) { return 1.0 + 1.0 / std::sqrt(n); }, 1.0);
  scalar("alternating_inv_n", [](double n) { return (std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0) / n; }, 0.0);
  vector_of("2d(inv_n,half^n)", [](double n) { return vec({1.0 / n, std::pow(0.5, n)}); }, vec({0.0, 0.0}));
  vector_of("2d(2+1/n^2,-1+0.9^n)", [](double n) { return vec({2.0 + 1.0 / (n * n), -1.0 + std::pow(0.9, n)}); },
         vec({2.0, -1.0}));
  vector_of("2d_const", [](double) { return vec({1.0, 2.0}); }, vec({1.0, 2.0}));
  vector_of("3d(inv_n,inv_n_sq,half^n)", [](double n) { return vec({1.0 / n, 1.0 / (n * n), std::pow(0.5, n)}); },
         vec({0.0, 0.0, 0.0}));
  vector_of("3d_const", [](double) { return vec({0.0, 0.0, 0.0}); }, vec({0.0, 0.0, 0.0}));
  vector_of("3d_geometric", [](double n) -> Vector { return std::pow(0.8, n) * vec({1.0, -1.0, 2.0}); },
         vec({0.0, 0.0, 0.0}));
  return out;
}

}  // namespace snorm
