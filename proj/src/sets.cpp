#include "bihyp/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bihyp/error.hpp"
#include "bihyp/seminorm.hpp"

namespace bihyp {

namespace {

void require_trials(std::size_t trials) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
}

bool hull_contains(const PolytopeHull& hull, std::span<const double> v) {
  if (hull.vertices.front().size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "point length differs from hull dimension");
  }
  if (hull.vertices.size() == 1) {
    const auto& p = hull.vertices.front();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (std::abs(p[k] - v[k]) > kMembershipTol) return false;
    }
    return true;
  }
  const auto sol = solve_convex_combination({hull.vertices, RealVector(v.begin(), v.end())});
  if (sol.status == LPStatus::Stalled) throw Error(ErrorCode::NumericalStall, "hull membership LP stalled");
  return sol.status == LPStatus::Optimal;
}

HVector with_component(std::size_t dim, const std::array<double, 4>& values) {
  HVector::Components c;
  for (std::size_t i = 0; i < 4; ++i) c[i].assign(dim, values[i]);
  return HVector::from_components(std::move(c));
}

HVector center_of(const LambdaPredicate& p) { return p.center ? *p.center : HVector(p.dim); }

/// Rough radius of the unit ball of a seminorm, used to size sampling boxes.
double unit_radius(const Seminorm& p) {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaugeSeminorm>) {
          double r = 0.0;
          for (const auto& part : s.set.parts) r = std::max(r, body_extent(part));
          return r;
        } else if constexpr (std::is_same_v<T, SupFamily>) {
          double r = std::numeric_limits<double>::infinity();
          for (const auto& m : s.members) r = std::min(r, unit_radius(m));
          return std::isfinite(r) ? r : 1.0;
        } else {
          return 1.0;
        }
      },
      p.form);
}

RealVector sample_body(const RealConvexBody& body, std::size_t dim, Rng& rng) {
  if (const auto* ball = std::get_if<NormBall>(&body)) {
    RealVector g(dim);
    double n = 0.0;
    while (n == 0.0) {
      for (double& v : g) v = rng.normal();
      n = component_norm(ball->p, g);
    }
    double r = ball->radius * std::pow(rng.uniform(0.0, 1.0), 1.0 / static_cast<double>(dim));
    if (!ball->closed) r *= 1.0 - 1e-12;
    for (double& v : g) v *= r / n;
    return g;
  }
  const auto& hull = std::get<PolytopeHull>(body);
  RealVector w(hull.vertices.size());
  double total = 0.0;
  for (double& v : w) total += (v = rng.exponential());
  RealVector out(dim, 0.0);
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t k = 0; k < dim; ++k) out[k] += (w[j] / total) * hull.vertices[j][k];
  }
  return out;
}

RealVector boundary_body(const RealConvexBody& body, std::size_t dim, Rng& rng) {
  if (const auto* ball = std::get_if<NormBall>(&body)) {
    RealVector g(dim);
    double n = 0.0;
    while (n == 0.0) {
      for (double& v : g) v = rng.normal();
      n = component_norm(ball->p, g);
    }
    const double r = ball->closed ? ball->radius : ball->radius * (1.0 - 1e-12);
    for (double& v : g) v *= r / n;
    return g;
  }
  const auto& hull = std::get<PolytopeHull>(body);
  return hull.vertices[rng.index(hull.vertices.size())];
}

HVector linear_point(const HVector& x, const HVector& y, const Bihyperbolic& lambda) {
  return lambda * x + (Bihyperbolic::one() - lambda) * y;
}

/// Runs `test(t, rng)` for each trial on its own stream; the first returned
/// witness stops the run.
template <class Test>
CheckReport run_trials(std::size_t trials, std::uint64_t seed, Test&& test) {
  require_trials(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, t);
    if (auto w = test(t, rng)) return failed(t + 1, seed, std::move(*w));
  }
  return {Verdict::SampledPass, trials, std::nullopt, seed, {}};
}

/// Number of leading trials spent on structured combinations.
std::size_t structured_budget(std::size_t combos, std::size_t trials) {
  return std::min(combos, std::max<std::size_t>(trials / 2, std::min<std::size_t>(trials, 1)));
}

bool all_slices(const H2Set& set, const HVector& x) {
  for (int i = 1; i <= 4; ++i) {
    if (!in_slice(set, i, x)) return false;
  }
  return true;
}

}  // namespace

RealConvexBody make_hull(std::vector<RealVector> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "hull needs at least one vertex");
  const std::size_t n = vertices.front().size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "hull vertices must be nonempty");
  for (const auto& v : vertices) {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "hull vertices differ in length");
    for (double c : v) {
      if (!std::isfinite(c)) throw Error(ErrorCode::InvalidInput, "hull vertex is not finite");
    }
  }
  return PolytopeHull{std::move(vertices)};
}

RealConvexBody make_ball(ComponentNorm p, double radius, bool closed) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error(ErrorCode::InvalidInput, "ball radius must be positive");
  return NormBall{p, radius, closed};
}

bool body_contains(const RealConvexBody& body, std::span<const double> v) {
  if (const auto* ball = std::get_if<NormBall>(&body)) {
    const double n = component_norm(ball->p, v);
    return ball->closed ? n <= ball->radius + kMembershipTol : n < ball->radius;
  }
  return hull_contains(std::get<PolytopeHull>(body), v);
}

RealConvexBody scale_body(const RealConvexBody& body, double factor, std::size_t dim) {
  if (factor == 0.0) return PolytopeHull{{RealVector(dim, 0.0)}};
  if (const auto* ball = std::get_if<NormBall>(&body)) {
    return NormBall{ball->p, ball->radius * std::abs(factor), ball->closed};
  }
  PolytopeHull out = std::get<PolytopeHull>(body);
  for (auto& v : out.vertices) {
    for (double& c : v) c *= factor;
  }
  return out;
}

bool is_origin_symmetric(const RealConvexBody& body) {
  if (std::holds_alternative<NormBall>(body)) return true;
  const auto& hull = std::get<PolytopeHull>(body);
  for (const auto& v : hull.vertices) {
    RealVector m(v.size());
    std::transform(v.begin(), v.end(), m.begin(), [](double c) { return -c; });
    if (!hull_contains(hull, m)) return false;
  }
  return true;
}

double body_extent(const RealConvexBody& body) {
  if (const auto* ball = std::get_if<NormBall>(&body)) return ball->radius;
  double h = 0.0;
  for (const auto& v : std::get<PolytopeHull>(body).vertices) {
    for (double c : v) h = std::max(h, std::abs(c));
  }
  return h;
}

Product Product::uniform(std::size_t dim, const RealConvexBody& body) {
  return make_product({body, body, body, body}, dim);
}

Product make_product(std::array<RealConvexBody, 4> parts, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidInput, "dimension must be positive");
  for (std::size_t i = 0; i < 4; ++i) {
    if (const auto* hull = std::get_if<PolytopeHull>(&parts[i])) {
      if (hull->vertices.empty()) throw Error(ErrorCode::InvalidInput, "hull needs at least one vertex");
      for (const auto& v : hull->vertices) {
        if (v.size() != dim) {
          throw Error(ErrorCode::DimensionMismatch,
                      "part " + std::to_string(i + 1) + " vertex length differs from set dimension");
        }
      }
    }
  }
  return Product{std::move(parts), dim};
}

std::size_t H2Set::dim() const noexcept {
  return std::visit([](const auto& s) { return s.dim; }, form_);
}

const Product& H2Set::product() const {
  if (const auto* p = std::get_if<Product>(&form_)) return *p;
  throw Error(ErrorCode::UnsupportedSet, "operation needs an idempotent product set");
}

H2Set abs_sum_lt(std::size_t dim, double c) {
  LambdaPredicate p;
  p.rule = PredicateRule::AbsSumLt;
  p.dim = dim;
  p.c = c;
  return p;
}

H2Set modulus_lt_or_one(std::size_t dim, double c) {
  LambdaPredicate p;
  p.rule = PredicateRule::ModulusLtOrOne;
  p.dim = dim;
  p.c = c;
  return p;
}

bool contains(const H2Set& set, const HVector& x) {
  if (x.dim() != set.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from set dimension");
  if (set.is_product()) {
    const auto& p = set.product();
    for (std::size_t i = 0; i < 4; ++i) {
      if (!body_contains(p.parts[i], x.component(i))) return false;
    }
    return true;
  }
  const auto& pred = *set.predicate();
  switch (pred.rule) {
    case PredicateRule::AbsSumLt: {
      double sum = 0.0;
      for (const auto& c : x.comps()) {
        for (double v : c) sum += std::abs(v);
      }
      return sum < pred.c;
    }
    case PredicateRule::ModulusLtOrOne: {
      bool small = true;
      bool one = true;
      for (const auto& c : x.comps()) {
        for (double v : c) {
          small = small && std::abs(v) < pred.c;
          one = one && std::abs(v - 1.0) <= kMembershipTol;
        }
      }
      return small || one;
    }
    case PredicateRule::SeminormBall: {
      const HVector d = pred.center ? x - *pred.center : x;
      for (const auto& p : pred.seminorms) {
        const Bihyperbolic v = eval(*p, d);
        if (pred.strict ? !strictly_precedes(v, pred.epsilon) : !precedes(v, pred.epsilon, kMembershipTol)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

H2Set scale(const Bihyperbolic& lambda, const H2Set& set) {
  const Product& p = set.product();
  Product out = p;
  for (std::size_t i = 0; i < 4; ++i) out.parts[i] = scale_body(p.parts[i], lambda[i], p.dim);
  return out;
}

bool in_slice(const H2Set& set, int i, const HVector& x) {
  if (i < 1 || i > 4) throw Error(ErrorCode::BadIndex, "idempotent index must be in 1..4");
  if (set.is_product()) {
    if (x.dim() != set.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from set dimension");
    return body_contains(set.product().parts[static_cast<std::size_t>(i - 1)], x.component(static_cast<std::size_t>(i - 1)));
  }
  return contains(set, project(x, i));
}

std::array<double, 4> sampling_box(const H2Set& set) {
  if (set.is_product()) {
    const auto& p = set.product();
    std::array<double, 4> h{};
    for (std::size_t i = 0; i < 4; ++i) h[i] = body_extent(p.parts[i]);
    return h;
  }
  const auto& pred = *set.predicate();
  double h = 1.0;
  switch (pred.rule) {
    case PredicateRule::AbsSumLt:
      h = pred.c;
      break;
    case PredicateRule::ModulusLtOrOne:
      h = std::max(pred.c, 1.0);
      break;
    case PredicateRule::SeminormBall:
      if (pred.box > 0.0) {
        h = pred.box;
      } else {
        double r = std::numeric_limits<double>::infinity();
        for (const auto& p : pred.seminorms) r = std::min(r, unit_radius(*p));
        if (!std::isfinite(r)) r = 1.0;
        const auto& e = pred.epsilon.lambda();
        h = 2.0 * r * *std::max_element(e.begin(), e.end());
      }
      break;
  }
  return {h, h, h, h};
}

std::vector<HVector> structured_points(const H2Set& set, bool members_only, bool small_first) {
  const std::size_t n = set.dim();
  const auto h = sampling_box(set);
  std::vector<std::array<int, 4>> patterns{{1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i) {
    std::array<int, 4> p{};
    p[static_cast<std::size_t>(i)] = 1;
    patterns.push_back(p);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::array<int, 4> p{};
      p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(j)] = 1;
      patterns.push_back(p);
    }
  }
  for (int skip = 3; skip >= 0; --skip) {
    std::array<int, 4> p{1, 1, 1, 1};
    p[static_cast<std::size_t>(skip)] = 0;
    patterns.push_back(p);
  }

  std::vector<HVector> raw;
  const std::array<double, 2> factors = small_first ? std::array{0.375, 0.75} : std::array{0.75, 0.375};
  for (double f : factors) {
    for (const auto& p : patterns) {
      std::array<double, 4> v{};
      for (std::size_t i = 0; i < 4; ++i) v[i] = f * h[i] * p[i];
      raw.push_back(with_component(n, v));
    }
  }
  raw.emplace_back(n);
  raw.push_back(HVector::constant(n, Bihyperbolic::one()));

  if (const auto* pred = set.predicate(); pred != nullptr && pred->center) {
    for (auto& x : raw) x += *pred->center;
  }
  if (!members_only) return raw;
  std::vector<HVector> out;
  for (auto& x : raw) {
    if (contains(set, x)) out.push_back(std::move(x));
  }
  return out;
}

HVector sample_member(const H2Set& set, Rng& rng) {
  const std::size_t n = set.dim();
  if (set.is_product()) {
    const auto& p = set.product();
    HVector::Components c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = sample_body(p.parts[i], n, rng);
    return HVector::from_components(std::move(c));
  }
  const HVector center = center_of(*set.predicate());
  for (int attempt = 0; attempt < 16; ++attempt) {
    HVector offset = sample_box(set, rng) - center;
    for (int halving = 0; halving <= 60; ++halving) {
      HVector x = center + offset;
      if (contains(set, x)) return x;
      offset *= 0.5;
    }
  }
  throw Error(ErrorCode::SamplingFailure, "no member found in the sampling box");
}

HVector sample_box(const H2Set& set, Rng& rng, double inflate) {
  const auto h = sampling_box(set);
  HVector::Components c;
  for (std::size_t i = 0; i < 4; ++i) {
    c[i].resize(set.dim());
    for (double& v : c[i]) v = h[i] > 0.0 ? rng.uniform(-h[i] * inflate, h[i] * inflate) : 0.0;
  }
  HVector x = HVector::from_components(std::move(c));
  if (const auto* pred = set.predicate(); pred != nullptr && pred->center) x += *pred->center;
  return x;
}

HVector sample_boundary(const Product& set, Rng& rng) {
  HVector::Components c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = boundary_body(set.parts[i], set.dim, rng);
  return HVector::from_components(std::move(c));
}

std::vector<Bihyperbolic> degenerate_unit_interval() {
  std::vector<Bihyperbolic> out{Bihyperbolic::zero(), Bihyperbolic::one()};
  for (int i = 1; i <= 4; ++i) out.push_back(Bihyperbolic::idempotent(i));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) out.push_back(Bihyperbolic::idempotent(i) + Bihyperbolic::idempotent(j));
  }
  for (int skip = 4; skip >= 1; --skip) out.push_back(Bihyperbolic::one() - Bihyperbolic::idempotent(skip));
  return out;
}

std::vector<Bihyperbolic> degenerate_unit_ball() {
  std::vector<Bihyperbolic> out = degenerate_unit_interval();
  for (unsigned mask = 1; mask < 16; ++mask) {
    Bihyperbolic::Lambda l{};
    for (std::size_t k = 0; k < 4; ++k) l[k] = (mask >> k) & 1U ? -1.0 : 1.0;
    out.push_back(Bihyperbolic::from_lambda(l));
  }
  for (int i = 1; i <= 4; ++i) out.push_back(-Bihyperbolic::idempotent(i));
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) out.push_back(Bihyperbolic::idempotent(i) - Bihyperbolic::idempotent(j));
  }
  return out;
}

CheckReport check_h2_convex(const H2Set& set, std::size_t trials, std::uint64_t seed) {
  require_trials(trials);
  if (set.is_product()) return certified(seed);
  const auto members = structured_points(set, true);
  const auto lambdas = degenerate_unit_interval();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) pairs.emplace_back(a, b);
  }
  const std::size_t budget = structured_budget(pairs.size() * lambdas.size(), trials);
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    HVector x;
    HVector y;
    Bihyperbolic lambda;
    if (t < budget) {
      const auto [a, b] = pairs[t / lambdas.size()];
      x = members[a];
      y = members[b];
      lambda = lambdas[t % lambdas.size()];
    } else {
      x = sample_member(set, rng);
      y = sample_member(set, rng);
      lambda = t % 2 == 0 ? lambdas[rng.index(lambdas.size())] : rng.bihyperbolic(0.0, 1.0);
    }
    if (contains(set, linear_point(x, y, lambda))) return std::nullopt;
    return Witness{WitnessKind::ConvexCombination, {x, y}, {lambda}, {}};
  });
}

CheckReport check_balanced(const H2Set& set, std::size_t trials, std::uint64_t seed) {
  require_trials(trials);
  if (set.is_product()) {
    const auto& p = set.product();
    if (std::ranges::all_of(p.parts, [](const auto& b) { return is_origin_symmetric(b); })) return certified(seed);
  }
  auto members = structured_points(set, true);
  if (members.empty()) {
    Rng rng = Rng::stream(seed, trials);
    members.push_back(sample_member(set, rng));
  }
  const auto lambdas = degenerate_unit_ball();
  const std::size_t budget = structured_budget(members.size() * lambdas.size(), trials);
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    HVector x;
    Bihyperbolic lambda;
    if (t < budget) {
      x = members[t / lambdas.size()];
      lambda = lambdas[t % lambdas.size()];
    } else {
      x = sample_member(set, rng);
      lambda = t % 2 == 0 ? lambdas[rng.index(lambdas.size())] : rng.bihyperbolic(-1.0, 1.0);
    }
    if (contains(set, lambda * x)) return std::nullopt;
    return Witness{WitnessKind::BalancedScaling, {x}, {lambda}, {}};
  });
}

CheckReport check_absorbing(const H2Set& set, std::span<const HVector> probes, std::size_t trials,
                            std::uint64_t seed) {
  require_trials(trials);
  if (probes.empty()) throw Error(ErrorCode::InvalidInput, "absorbing check needs at least one probe");
  const auto base = degenerate_unit_interval();
  const std::size_t random_scalars = std::clamp<std::size_t>(trials / probes.size(), 1, 64);
  CheckReport report{Verdict::SampledPass, 0, std::nullopt, seed, {}};
  for (std::size_t q = 0; q < probes.size(); ++q) {
    const HVector& x = probes[q];
    std::optional<Bihyperbolic> last_bad;
    bool absorbed = false;
    for (int k = 0; k < 60 && !absorbed; ++k) {
      const double eps = std::ldexp(1.0, -k);
      Rng rng = Rng::stream(seed, q * 64 + static_cast<std::size_t>(k));
      last_bad.reset();
      for (std::size_t s = 0; s < base.size() + random_scalars && !last_bad; ++s) {
        const Bihyperbolic t = s < base.size() ? eps * base[s] : rng.bihyperbolic(0.0, eps);
        ++report.trials;
        if (!contains(set, t * x)) last_bad = t;
      }
      if (!last_bad) {
        absorbed = true;
        report.found.emplace_back(eps);
      }
    }
    if (!absorbed) return failed(report.trials, seed, {WitnessKind::NotAbsorbed, {x}, {*last_bad}, {}});
  }
  return report;
}

CheckReport check_decomposition(const H2Set& set, std::size_t trials, std::uint64_t seed) {
  require_trials(trials);
  if (set.is_product()) return certified(seed);
  const auto points = structured_points(set, false, true);
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    HVector x = t < points.size() ? points[t] : (t % 2 == 0 ? sample_box(set, rng) : sample_member(set, rng));
    if (contains(set, x) == all_slices(set, x)) return std::nullopt;
    return Witness{WitnessKind::Decomposition, {x}, {}, {}};
  });
}

CheckReport minkowski_sum_subset_check(const H2Set& set, std::span<const int> indices, std::size_t trials,
                                       std::uint64_t seed) {
  require_trials(trials);
  if (indices.size() < 2 || indices.size() > 3) throw Error(ErrorCode::BadIndex, "need 2 or 3 idempotent indices");
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] < 1 || indices[a] > 4) throw Error(ErrorCode::BadIndex, "idempotent index must be in 1..4");
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] == indices[b]) throw Error(ErrorCode::BadIndex, "idempotent indices must be distinct");
    }
  }
  if (!contains(set, HVector(set.dim()))) throw Error(ErrorCode::PreconditionFailed, "origin is not in the set");
  const auto members = structured_points(set, true);
  std::size_t combos = 1;
  for (std::size_t k = 0; k < indices.size(); ++k) combos *= members.size();
  const std::size_t budget = structured_budget(combos, trials);
  const std::vector<int> idx(indices.begin(), indices.end());
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    std::vector<HVector> xs;
    std::size_t digits = t;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (t < budget) {
        xs.push_back(members[digits % members.size()]);
        digits /= members.size();
      } else {
        xs.push_back(sample_member(set, rng));
      }
    }
    HVector z(set.dim());
    for (std::size_t k = 0; k < idx.size(); ++k) z += project(xs[k], idx[k]);
    if (contains(set, z)) return std::nullopt;
    return Witness{WitnessKind::MinkowskiSum, std::move(xs), {}, idx};
  });
}

CheckReport check_projection_stable(const H2Set& set, std::size_t trials, std::uint64_t seed) {
  const auto members = structured_points(set, true);
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = t < members.size() ? members[t] : sample_member(set, rng);
    for (int i = 1; i <= 4; ++i) {
      HVector p = project(x, i);
      if (!contains(set, p)) return Witness{WitnessKind::ProjectionStability, {x, std::move(p)}, {}, {i}};
    }
    return std::nullopt;
  });
}

CheckReport check_slices_balanced(const H2Set& set, std::size_t trials, std::uint64_t seed) {
  const auto members = structured_points(set, true);
  constexpr std::array<double, 4> kFixed{0.0, 1.0, -1.0, -0.5};
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = t < members.size() ? members[t] : sample_member(set, rng);
    const int i = static_cast<int>(t % 4) + 1;
    const double a = (t / 4) % 2 == 0 ? kFixed[(t / 8) % kFixed.size()] : rng.uniform(-1.0, 1.0);
    if (in_slice(set, i, a * x)) return std::nullopt;
    return Witness{WitnessKind::SliceBalance, {x}, {Bihyperbolic(a)}, {i}};
  });
}

CheckReport check_scaling(const H2Set& set, std::span<const Bihyperbolic> lambdas, std::size_t trials,
                          std::uint64_t seed) {
  require_trials(trials);
  if (lambdas.empty()) throw Error(ErrorCode::InvalidInput, "scaling check needs at least one scalar");
  CheckReport report{Verdict::SampledPass, 0, std::nullopt, seed, {}};
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    const Bihyperbolic& lambda = lambdas[l];
    const Bihyperbolic mod = modulus(lambda);
    const H2Set a = scale(lambda, set);
    const H2Set b = scale(mod, set);
    auto points = structured_points(a, false);
    for (auto& p : structured_points(b, false)) points.push_back(std::move(p));
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = Rng::stream(seed, l * trials + t);
      HVector x;
      if (t < points.size()) {
        x = points[t];
      } else if (t % 3 == 0) {
        x = sample_member(a, rng);
      } else if (t % 3 == 1) {
        x = sample_member(b, rng);
      } else {
        x = sample_box(b, rng, 1.25);
      }
      ++report.trials;
      if (contains(a, x) != contains(b, x)) {
        return failed(report.trials, seed, {WitnessKind::ScalingEquality, {x}, {lambda, mod}, {}});
      }
    }
  }
  return report;
}

bool reverify(const H2Set& set, const Witness& w) {
  const auto& pts = w.points;
  const auto& sc = w.scalars;
  switch (w.kind) {
    case WitnessKind::ConvexCombination:
      return pts.size() == 2 && sc.size() == 1 && is_nonnegative(sc[0]) && precedes(sc[0], Bihyperbolic::one()) &&
             contains(set, pts[0]) && contains(set, pts[1]) && !contains(set, linear_point(pts[0], pts[1], sc[0]));
    case WitnessKind::BalancedScaling:
      return pts.size() == 1 && sc.size() == 1 && precedes(modulus(sc[0]), Bihyperbolic::one()) &&
             contains(set, pts[0]) && !contains(set, sc[0] * pts[0]);
    case WitnessKind::NotAbsorbed:
      return pts.size() == 1 && sc.size() == 1 && is_nonnegative(sc[0]) && !contains(set, sc[0] * pts[0]);
    case WitnessKind::Decomposition:
      return pts.size() == 1 && contains(set, pts[0]) != all_slices(set, pts[0]);
    case WitnessKind::MinkowskiSum: {
      if (pts.empty() || pts.size() != w.indices.size()) return false;
      HVector z(set.dim());
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (!contains(set, pts[k])) return false;
        z += project(pts[k], w.indices[k]);
      }
      return !contains(set, z);
    }
    case WitnessKind::ProjectionStability:
      return !pts.empty() && w.indices.size() == 1 && contains(set, pts[0]) &&
             !contains(set, project(pts[0], w.indices[0]));
    case WitnessKind::SliceBalance:
      return pts.size() == 1 && sc.size() == 1 && w.indices.size() == 1 && contains(set, pts[0]) &&
             std::abs(sc[0][0]) <= 1.0 && !in_slice(set, w.indices[0], sc[0][0] * pts[0]);
    case WitnessKind::ScalingEquality:
      return pts.size() == 1 && sc.size() == 2 &&
             contains(scale(sc[0], set), pts[0]) != contains(scale(sc[1], set), pts[0]);
    default:
      return false;
  }
}

}  // namespace bihyp
