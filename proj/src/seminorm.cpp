#include "bihyp/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "bihyp/error.hpp"
#include "bihyp/gauge.hpp"

namespace bihyp {

namespace {

bool near_zero(const Bihyperbolic& v, double tol) noexcept {
  return std::ranges::all_of(v.lambda(), [tol](double c) { return std::abs(c) <= tol; });
}

bool nonnegative_rel(const Bihyperbolic& v, double tol) noexcept {
  return std::ranges::all_of(v.lambda(), [tol](double c) { return c >= -tol; });
}

/// Components every element of the kernel may occupy freely.
std::array<bool, 4> killed_components(const Seminorm& p) {
  return std::visit(
      [](const auto& s) -> std::array<bool, 4> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoordinateSeminorm>) {
          return {!s.kept[0], !s.kept[1], !s.kept[2], !s.kept[3]};
        } else if constexpr (std::is_same_v<T, SupFamily>) {
          std::array<bool, 4> out{true, true, true, true};
          for (const auto& m : s.members) {
            const auto k = killed_components(m);
            for (std::size_t i = 0; i < 4; ++i) out[i] = out[i] && k[i];
          }
          return out;
        } else {
          return {false, false, false, false};
        }
      },
      p.form);
}

HVector kernel_element(const std::array<bool, 4>& killed, std::size_t dim, Rng& rng) {
  HVector::Components c;
  for (std::size_t i = 0; i < 4; ++i) {
    c[i].assign(dim, 0.0);
    if (killed[i]) {
      for (double& v : c[i]) v = rng.uniform(-3.0, 3.0);
    }
  }
  return HVector::from_components(std::move(c));
}

template <class Test>
CheckReport run_trials(std::size_t trials, std::uint64_t seed, Test&& test) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, t);
    if (auto w = test(t, rng)) return failed(t + 1, seed, std::move(*w));
  }
  return {Verdict::SampledPass, trials, std::nullopt, seed, {}};
}

std::optional<Witness> axiom_violation(const SeminormFn& p, const HVector& x, const HVector& y,
                                       const Bihyperbolic& lambda, double tol) {
  const Bihyperbolic px = p(x);
  const Bihyperbolic py = p(y);
  if (!nonnegative_rel(px, tol)) return Witness{WitnessKind::SeminormNegative, {x}, {}, {}};
  if (!nonnegative_rel(py, tol)) return Witness{WitnessKind::SeminormNegative, {y}, {}, {}};
  if (!approx_equal(p(lambda * x), modulus(lambda) * px, tol)) {
    return Witness{WitnessKind::Homogeneity, {x}, {lambda}, {}};
  }
  if (!precedes_rel(p(x + y), px + py, tol)) return Witness{WitnessKind::Subadditivity, {x, y}, {}, {}};
  if (!precedes_rel(modulus(px - py), p(x - y), tol)) return Witness{WitnessKind::ReverseTriangle, {x, y}, {}, {}};
  return std::nullopt;
}

std::vector<HVector> separation_probes(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::vector<HVector> out;
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng = Rng::stream(seed, t);
    HVector x = sample_vector(dim, t, rng);
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

CoordinateSeminorm CoordinateSeminorm::keep(std::initializer_list<int> indices, ComponentNorm base) {
  CoordinateSeminorm s{{false, false, false, false}, base};
  for (int i : indices) {
    if (i < 1 || i > 4) throw Error(ErrorCode::BadIndex, "kept index must be in 1..4");
    s.kept[static_cast<std::size_t>(i - 1)] = true;
  }
  return s;
}

std::optional<std::size_t> Seminorm::fixed_dim() const {
  if (const auto* g = std::get_if<GaugeSeminorm>(&form)) return g->set.dim;
  if (const auto* s = std::get_if<SupFamily>(&form)) {
    for (const auto& m : s->members) {
      if (auto d = m.fixed_dim()) return d;
    }
  }
  return std::nullopt;
}

Bihyperbolic eval(const Seminorm& p, const HVector& x) {
  return std::visit(
      [&x](const auto& s) -> Bihyperbolic {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CanonicalNorm>) {
          return canonical_norm_eval(s, x);
        } else if constexpr (std::is_same_v<T, CoordinateSeminorm>) {
          Bihyperbolic::Lambda l{};
          for (std::size_t i = 0; i < 4; ++i) l[i] = s.kept[i] ? component_norm(s.base, x.component(i)) : 0.0;
          return Bihyperbolic::from_lambda(l);
        } else if constexpr (std::is_same_v<T, GaugeSeminorm>) {
          return h2_gauge(s.set, x).value;
        } else {
          if (s.members.empty()) throw Error(ErrorCode::EmptySet, "sup family has no members");
          std::vector<Bihyperbolic> values;
          values.reserve(s.members.size());
          for (const auto& m : s.members) values.push_back(eval(m, x));
          return sup_h2(values);
        }
      },
      p.form);
}

SeminormFn as_function(const Seminorm& p) {
  return [p](const HVector& x) { return eval(p, x); };
}

H2Set unit_ball(const Seminorm& p, std::size_t dim, bool strict) {
  if (auto d = p.fixed_dim(); d && *d != dim) {
    throw Error(ErrorCode::DimensionMismatch, "seminorm dimension differs from requested dimension");
  }
  LambdaPredicate pred;
  pred.rule = PredicateRule::SeminormBall;
  pred.dim = dim;
  pred.seminorms.push_back(std::make_shared<const Seminorm>(p));
  pred.epsilon = Bihyperbolic::one();
  pred.strict = strict;
  return pred;
}

HVector sample_vector(std::size_t dim, std::size_t trial, Rng& rng, double scale) {
  static const std::vector<Bihyperbolic> kStructured = [] {
    std::vector<Bihyperbolic> v{Bihyperbolic::one(), -Bihyperbolic::one()};
    for (int i = 1; i <= 4; ++i) v.push_back(Bihyperbolic::idempotent(i));
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) v.push_back(Bihyperbolic::idempotent(i) + Bihyperbolic::idempotent(j));
    }
    v.push_back(Bihyperbolic::j1());
    v.push_back(Bihyperbolic::j2());
    v.push_back(Bihyperbolic::j3());
    return v;
  }();
  if (trial < kStructured.size()) return HVector::constant(dim, kStructured[trial]);
  HVector::Components c;
  const bool sparse = trial % 3 == 0;
  for (auto& comp : c) {
    comp.resize(dim);
    const bool killed = sparse && rng.coin();
    for (double& v : comp) v = killed ? 0.0 : rng.uniform(-scale, scale);
  }
  return HVector::from_components(std::move(c));
}

std::vector<Bihyperbolic> degenerate_scalars() {
  std::vector<Bihyperbolic> out = degenerate_unit_ball();
  out.push_back(2.5 * Bihyperbolic::idempotent(1));
  out.push_back(-3.0 * (Bihyperbolic::idempotent(2) + Bihyperbolic::idempotent(4)));
  out.push_back(0.5 * Bihyperbolic::j2());
  out.push_back(Bihyperbolic::from_lambda(2.0, -0.5, 0.0, 4.0));
  return out;
}

bool precedes_rel(const Bihyperbolic& a, const Bihyperbolic& b, double tol) noexcept {
  for (std::size_t k = 0; k < 4; ++k) {
    const double slack = tol * std::max({1.0, std::abs(a[k]), std::abs(b[k])});
    if (a[k] > b[k] + slack) return false;
  }
  return true;
}

bool approx_equal(const Bihyperbolic& a, const Bihyperbolic& b, double tol) noexcept {
  return precedes_rel(a, b, tol) && precedes_rel(b, a, tol);
}

CheckReport check_seminorm_axioms(const SeminormFn& p, std::size_t dim, std::size_t trials, std::uint64_t seed,
                                  double tol) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  const HVector zero(dim);
  if (!near_zero(p(zero), tol)) return failed(1, seed, {WitnessKind::SeminormAtZero, {zero}, {}, {}});
  const auto scalars = degenerate_scalars();
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = sample_vector(dim, t, rng);
    const HVector y = sample_vector(dim, t + 1, rng);
    const Bihyperbolic lambda = t < scalars.size() ? scalars[t] : rng.bihyperbolic(-3.0, 3.0);
    return axiom_violation(p, x, y, lambda, tol);
  });
}

CheckReport check_seminorm_axioms(const Seminorm& p, std::size_t dim, std::size_t trials, std::uint64_t seed,
                                  double tol) {
  return check_seminorm_axioms(as_function(p), dim, trials, seed, tol);
}

CheckReport kernel_check(const Seminorm& p, std::size_t dim, std::size_t trials, std::uint64_t seed, double tol) {
  const auto killed = killed_components(p);
  const auto scalars = degenerate_scalars();
  return run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector k1 = kernel_element(killed, dim, rng);
    const HVector k2 = kernel_element(killed, dim, rng);
    const Bihyperbolic lambda = t < scalars.size() ? scalars[t] : rng.bihyperbolic(-3.0, 3.0);
    if (!near_zero(eval(p, k1), tol) || !near_zero(eval(p, k2), tol) || !near_zero(eval(p, k1 + k2), tol) ||
        !near_zero(eval(p, lambda * k1), tol)) {
      return Witness{WitnessKind::KernelClosure, {k1, k2}, {lambda}, {}};
    }
    return std::nullopt;
  });
}

CheckReport is_separated(const SeminormFamily& family, std::span<const HVector> probes, std::size_t trials,
                         std::uint64_t seed, double tol) {
  if (family.members.empty()) throw Error(ErrorCode::EmptySet, "seminorm family is empty");
  if (probes.empty()) throw Error(ErrorCode::InvalidInput, "separation check needs at least one probe");
  auto separates = [&](const HVector& x) {
    return std::ranges::any_of(family.members, [&](const Seminorm& p) { return !near_zero(eval(p, x), tol); });
  };
  for (std::size_t q = 0; q < probes.size(); ++q) {
    if (probes[q].is_zero(tol)) throw Error(ErrorCode::InvalidInput, "separation probes must be nonzero");
    if (!separates(probes[q])) return failed(q + 1, seed, {WitnessKind::Separation, {probes[q]}, {}, {}});
  }
  const std::size_t dim = probes.front().dim();
  auto report = run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = sample_vector(dim, t, rng);
    if (x.is_zero(tol) || separates(x)) return std::nullopt;
    return Witness{WitnessKind::Separation, {x}, {}, {}};
  });
  report.trials += probes.size();
  return report;
}

Seminorm sup_family(std::span<const Seminorm> members, std::size_t m) {
  if (m < 1 || m > members.size()) throw Error(ErrorCode::BadIndex, "sup family size must be in 1..members");
  return Seminorm{SupFamily{std::vector<Seminorm>(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(m))}};
}

CheckReport check_sup_monotone(const SeminormFamily& family, std::size_t dim, std::size_t trials,
                               std::uint64_t seed, double tol) {
  if (family.members.empty()) throw Error(ErrorCode::EmptySet, "seminorm family is empty");
  const std::size_t len = family.members.size();
  std::vector<Seminorm> q;
  for (std::size_t m = 1; m <= len; ++m) q.push_back(sup_family(family.members, m));

  auto report = run_trials(trials, seed, [&](std::size_t t, Rng& rng) -> std::optional<Witness> {
    const HVector x = sample_vector(dim, t, rng);
    for (std::size_t m = 0; m + 1 < len; ++m) {
      if (!precedes_rel(eval(q[m], x), eval(q[m + 1], x), tol)) {
        return Witness{WitnessKind::Monotonicity, {x}, {}, {static_cast<int>(m + 1)}};
      }
    }
    return std::nullopt;
  });
  if (!report.passed()) return report;

  const auto probes = separation_probes(dim, std::min<std::size_t>(trials, 64), seed);
  for (std::size_t m = 1; m <= len; ++m) {
    const SeminormFamily prefix{std::vector<Seminorm>(family.members.begin(),
                                                      family.members.begin() + static_cast<std::ptrdiff_t>(m))};
    if (!is_separated(prefix, probes, 1, seed, tol).passed()) continue;
    auto inherited = is_separated(SeminormFamily{{q[m - 1]}}, probes, 1, seed, tol);
    if (!inherited.passed()) {
      inherited.witness->indices = {static_cast<int>(m)};
      return failed(report.trials, seed, std::move(*inherited.witness));
    }
  }
  return report;
}

bool reverify(const SeminormFn& p, const Witness& w, double tol) {
  const auto& pts = w.points;
  switch (w.kind) {
    case WitnessKind::SeminormAtZero:
      return pts.size() == 1 && pts[0].is_zero() && !near_zero(p(pts[0]), tol);
    case WitnessKind::SeminormNegative:
      return pts.size() == 1 && !nonnegative_rel(p(pts[0]), tol);
    case WitnessKind::Homogeneity:
      return pts.size() == 1 && w.scalars.size() == 1 &&
             !approx_equal(p(w.scalars[0] * pts[0]), modulus(w.scalars[0]) * p(pts[0]), tol);
    case WitnessKind::Subadditivity:
      return pts.size() == 2 && !precedes_rel(p(pts[0] + pts[1]), p(pts[0]) + p(pts[1]), tol);
    case WitnessKind::ReverseTriangle:
      return pts.size() == 2 && !precedes_rel(modulus(p(pts[0]) - p(pts[1])), p(pts[0] - pts[1]), tol);
    case WitnessKind::KernelClosure:
      return pts.size() == 2 && w.scalars.size() == 1 && near_zero(p(pts[0]), tol) && near_zero(p(pts[1]), tol) &&
             (!near_zero(p(pts[0] + pts[1]), tol) || !near_zero(p(w.scalars[0] * pts[0]), tol));
    default:
      return false;
  }
}

bool reverify(const SeminormFamily& family, const Witness& w, double tol) {
  if (w.points.size() != 1) return false;
  const HVector& x = w.points[0];
  switch (w.kind) {
    case WitnessKind::Separation:
      if (x.is_zero(tol)) return false;
      if (!w.indices.empty()) {
        const auto m = static_cast<std::size_t>(w.indices[0]);
        return m >= 1 && m <= family.members.size() && near_zero(eval(sup_family(family.members, m), x), tol);
      }
      return std::ranges::all_of(family.members, [&](const Seminorm& p) { return near_zero(eval(p, x), tol); });
    case WitnessKind::Monotonicity: {
      if (w.indices.size() != 1) return false;
      const auto m = static_cast<std::size_t>(w.indices[0]);
      if (m < 1 || m + 1 > family.members.size()) return false;
      return !precedes_rel(eval(sup_family(family.members, m), x), eval(sup_family(family.members, m + 1), x), tol);
    }
    default:
      return false;
  }
}

}  // namespace bihyp
