#include "bihyp/metric.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "bihyp/error.hpp"

namespace bihyp {

namespace {

constexpr int kSequenceSteps = 40;

template <class Test>
CheckReport run_trials(std::size_t trials, std::uint64_t seed, Test&& test) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, t);
    if (auto w = test(t, rng)) return failed(t + 1, seed, std::move(*w));
  }
  return {Verdict::SampledPass, trials, std::nullopt, seed, {}};
}

double max_component(const Bihyperbolic& b) {
  const auto& l = b.lambda();
  return *std::max_element(l.begin(), l.end());
}

bool small(const Bihyperbolic& b, double tol) {
  return std::ranges::all_of(b.lambda(), [tol](double c) { return std::abs(c) <= tol; });
}

void validate(const H2Metric& m) {
  if (m.family.members.empty()) throw Error(ErrorCode::EmptySet, "metric needs a nonempty seminorm family");
  if (m.truncation == 0) throw Error(ErrorCode::InvalidInput, "truncation must be positive");
}

std::optional<Witness> axiom_violation(const H2Metric& m, const HVector& x, const HVector& y, const HVector& z,
                                       double tol) {
  const Bihyperbolic dxx = metric_eval(m, x, x);
  if (!small(dxx, tol)) return Witness{WitnessKind::MetricIdentity, {x, x}, {}, {}};
  const Bihyperbolic dxy = metric_eval(m, x, y);
  if (!is_nonnegative(dxy)) return Witness{WitnessKind::MetricNonnegative, {x, y}, {}, {}};
  if (!(x - y).is_zero(tol) && small(dxy, 0.0)) return Witness{WitnessKind::MetricIdentity, {x, y}, {}, {}};
  if (!approx_equal(dxy, metric_eval(m, y, x), tol)) return Witness{WitnessKind::MetricSymmetry, {x, y}, {}, {}};
  if (!precedes_rel(metric_eval(m, x, z), dxy + metric_eval(m, y, z), tol)) {
    return Witness{WitnessKind::MetricTriangle, {x, y, z}, {}, {}};
  }
  if (!approx_equal(metric_eval(m, x + z, y + z), dxy, tol)) {
    return Witness{WitnessKind::MetricTranslation, {x, y, z}, {}, {}};
  }
  return std::nullopt;
}

/// Distance of the images at the end of the perturbation sequence.
std::pair<Bihyperbolic, Bihyperbolic> continuity_gaps(const H2Metric& m, const HVector& x, const HVector& y,
                                                      const Bihyperbolic& lambda, const HVector& u,
                                                      const HVector& v, const Bihyperbolic& mu) {
  const double h = std::ldexp(1.0, -kSequenceSteps);
  const HVector xk = x + h * u;
  const HVector yk = y + h * v;
  const Bihyperbolic lk = lambda + h * mu;
  return {metric_eval(m, xk + yk, x + y), metric_eval(m, lk * xk, lambda * x)};
}

bool inside_scaled(const Neighborhood& u, const HVector& y, double lambda) {
  const Bihyperbolic bound = lambda * u.epsilon();
  return std::ranges::all_of(u.seminorms(),
                             [&](const Seminorm& p) { return strictly_precedes(eval(p, y), bound); });
}

}  // namespace

Bihyperbolic metric_eval(const H2Metric& metric, const HVector& x, const HVector& y) {
  validate(metric);
  require_same_dim(x, y);
  const HVector u = x - y;
  const std::size_t terms = std::min(metric.truncation, metric.family.members.size());
  Bihyperbolic sum;
  for (std::size_t n = 1; n <= terms; ++n) {
    const Bihyperbolic p = eval(metric.family.members[n - 1], u);
    sum += std::ldexp(1.0, -static_cast<int>(n)) * p * inverse(Bihyperbolic::one() + p);
  }
  return sum;
}

CheckReport check_metric_axioms(const H2Metric& metric, std::size_t dim, std::size_t trials, std::uint64_t seed,
                                double tol) {
  validate(metric);
  std::vector<HVector> probes;
  for (std::size_t t = 0; t < std::min<std::size_t>(trials, 64); ++t) {
    Rng rng = Rng::stream(seed, t);
    HVector p = sample_vector(dim, t, rng);
    if (!p.is_zero(tol)) probes.push_back(std::move(p));
  }
  auto sep = is_separated(metric.family, probes, 1, seed, tol);
  if (!sep.passed()) {
    return failed(sep.trials, seed, {WitnessKind::MetricIdentity, {HVector(dim), sep.witness->points[0]}, {}, {}});
  }
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = sample_vector(dim, t, rng);
    if (t == 0) return axiom_violation(metric, x, x, x, tol);
    return axiom_violation(metric, x, sample_vector(dim, t + 1, rng), sample_vector(dim, t + 2, rng), tol);
  });
}

CheckReport check_truncation_tail(const SeminormFamily& family, std::size_t n, std::size_t n_prime, std::size_t dim,
                                  std::size_t trials, std::uint64_t seed, double tol) {
  if (n == 0 || n >= n_prime) throw Error(ErrorCode::InvalidInput, "need 0 < N < N'");
  const H2Metric short_metric{family, n};
  const H2Metric long_metric{family, n_prime};
  const Bihyperbolic tail(std::ldexp(1.0, -static_cast<int>(n)));
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = sample_vector(dim, t, rng, 8.0);
    const HVector y = sample_vector(dim, t + 1, rng, 8.0);
    const Bihyperbolic a = metric_eval(short_metric, x, y);
    const Bihyperbolic b = metric_eval(long_metric, x, y);
    if (precedes_rel(a, b, tol) && precedes_rel(b - a, tail, tol)) return std::nullopt;
    return Witness{WitnessKind::TruncationTail, {x, y}, {}, {static_cast<int>(n), static_cast<int>(n_prime)}};
  });
}

CheckReport check_module_continuity(const H2Metric& metric, std::size_t dim, std::size_t trials, std::uint64_t seed,
                                    double tol) {
  validate(metric);
  const auto scalars = degenerate_scalars();
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = sample_vector(dim, t, rng);
    const HVector y = sample_vector(dim, t + 1, rng);
    const Bihyperbolic lambda = t < scalars.size() ? scalars[t] : rng.bihyperbolic(-3.0, 3.0);
    const HVector u = sample_vector(dim, scalars.size() + t, rng);
    const HVector v = sample_vector(dim, scalars.size() + t + 1, rng);
    const Bihyperbolic mu = rng.bihyperbolic(-1.0, 1.0);
    const auto [sum_gap, scale_gap] = continuity_gaps(metric, x, y, lambda, u, v, mu);
    if (max_component(sum_gap) <= tol && max_component(scale_gap) <= tol) return std::nullopt;
    return Witness{WitnessKind::Continuity, {x, y, u, v}, {lambda, mu}, {}};
  });
}

CheckReport check_seminorm_continuity(const Seminorm& p, const H2Metric& metric, std::size_t dim,
                                      std::size_t trials, std::uint64_t seed, double tol) {
  validate(metric);
  const double h = std::ldexp(1.0, -kSequenceSteps);
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = sample_vector(dim, t, rng);
    const HVector u = sample_vector(dim, t + 1, rng);
    const HVector xk = x + h * u;
    if (max_component(metric_eval(metric, xk, x)) > tol) return std::nullopt;
    if (small(eval(p, xk) - eval(p, x), tol)) return std::nullopt;
    return Witness{WitnessKind::Continuity, {x, u}, {}, {}};
  });
}

Neighborhood::Neighborhood(HVector center, const Bihyperbolic& epsilon, std::vector<Seminorm> seminorms)
    : center_(std::move(center)), epsilon_(epsilon), seminorms_(std::move(seminorms)) {
  if (!is_positive(epsilon_)) throw Error(ErrorCode::InvalidInput, "neighborhood radius must be strictly positive");
  if (seminorms_.empty()) throw Error(ErrorCode::InvalidInput, "neighborhood needs at least one seminorm");
}

bool neighborhood_contains(const Neighborhood& u, const HVector& y) {
  require_same_dim(u.center(), y);
  const HVector d = y - u.center();
  return std::ranges::all_of(u.seminorms(),
                             [&](const Seminorm& p) { return strictly_precedes(eval(p, d), u.epsilon()); });
}

H2Set neighborhood_set(const Neighborhood& u) {
  LambdaPredicate pred;
  pred.rule = PredicateRule::SeminormBall;
  pred.dim = u.center().dim();
  for (const auto& p : u.seminorms()) pred.seminorms.push_back(std::make_shared<const Seminorm>(p));
  pred.center = u.center();
  pred.epsilon = u.epsilon();
  pred.strict = true;
  return pred;
}

CheckReport bounded_check(const H2Set& set, const Neighborhood& u, int search_cap, std::size_t trials,
                          std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  if (search_cap < 0) throw Error(ErrorCode::InvalidInput, "search cap must be nonnegative");
  if (!u.center().is_zero()) throw Error(ErrorCode::PreconditionFailed, "neighborhood must be centered at 0");
  require_same_dim(u.center(), HVector(set.dim()));

  std::vector<HVector> samples = structured_points(set, true);
  for (std::size_t t = 0; samples.size() < trials; ++t) {
    Rng rng = Rng::stream(seed, t);
    if (set.is_product()) {
      samples.push_back(t % 2 == 0 ? sample_boundary(set.product(), rng) : sample_member(set, rng));
    } else {
      samples.push_back(sample_member(set, rng));
    }
  }
  if (!set.is_product()) {
    // Push each sample outward along its ray while it stays in the set.
    for (auto& x : samples) {
      if (x.is_zero()) continue;
      for (int k = 0; k < search_cap + 2; ++k) {
        HVector next = 2.0 * x;
        if (!contains(set, next)) break;
        x = std::move(next);
      }
    }
  }

  const HVector* worst = nullptr;
  for (int k = 0; k <= search_cap; ++k) {
    const double lambda = std::ldexp(1.0, k);
    worst = nullptr;
    for (const auto& x : samples) {
      if (!inside_scaled(u, x, lambda)) {
        worst = &x;
        break;
      }
    }
    if (worst == nullptr) {
      CheckReport r{Verdict::SampledPass, samples.size(), std::nullopt, seed, {}};
      r.found.emplace_back(lambda);
      return r;
    }
  }
  return failed(samples.size(), seed,
                {WitnessKind::Unbounded, {*worst}, {Bihyperbolic(std::ldexp(1.0, search_cap))}, {}});
}

bool reverify(const H2Metric& m, const Witness& w, double tol) {
  const auto& p = w.points;
  switch (w.kind) {
    case WitnessKind::MetricIdentity:
      if (p.size() != 2) return false;
      if (p[0] == p[1]) return !small(metric_eval(m, p[0], p[1]), tol);
      return !(p[0] - p[1]).is_zero(tol) && small(metric_eval(m, p[0], p[1]), 0.0);
    case WitnessKind::MetricNonnegative:
      return p.size() == 2 && !is_nonnegative(metric_eval(m, p[0], p[1]));
    case WitnessKind::MetricSymmetry:
      return p.size() == 2 && !approx_equal(metric_eval(m, p[0], p[1]), metric_eval(m, p[1], p[0]), tol);
    case WitnessKind::MetricTriangle:
      return p.size() == 3 &&
             !precedes_rel(metric_eval(m, p[0], p[2]), metric_eval(m, p[0], p[1]) + metric_eval(m, p[1], p[2]), tol);
    case WitnessKind::MetricTranslation:
      return p.size() == 3 && !approx_equal(metric_eval(m, p[0] + p[2], p[1] + p[2]), metric_eval(m, p[0], p[1]), tol);
    case WitnessKind::Continuity: {
      if (p.size() != 4 || w.scalars.size() != 2) return false;
      const auto [a, b] = continuity_gaps(m, p[0], p[1], w.scalars[0], p[2], p[3], w.scalars[1]);
      return max_component(a) > tol || max_component(b) > tol;
    }
    default:
      return false;
  }
}

}  // namespace bihyp
