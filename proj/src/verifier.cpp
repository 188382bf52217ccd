#include "bihyp/verifier.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "bihyp/error.hpp"
#include "bihyp/gauge.hpp"
#include "bihyp/metric.hpp"
#include "bihyp/seminorm.hpp"
#include "bihyp/sets.hpp"

namespace bihyp {

namespace {

using Rule = std::function<std::optional<Expectation>(const Json&)>;
using Runner = std::function<Outcome(const Json&, const RunOptions&)>;

/// Merges consecutive check reports; the first failure ends the chain.
class Chain {
 public:
  explicit Chain(std::uint64_t seed) {
    report_.verdict = Verdict::CertifiedPass;
    report_.seed = seed;
  }

  template <class Reverify>
  bool add(CheckReport r, Reverify&& reverify) {
    if (failed_) return false;
    report_.trials += r.trials;
    report_.found.insert(report_.found.end(), r.found.begin(), r.found.end());
    if (r.verdict == Verdict::Fail) {
      failed_ = true;
      report_.verdict = Verdict::Fail;
      reverified_ = reverify(*r.witness);
      report_.witness = std::move(r.witness);
      return false;
    }
    if (r.verdict == Verdict::SampledPass) report_.verdict = Verdict::SampledPass;
    return true;
  }

  [[nodiscard]] Outcome done() const {
    return {report_, failed_ ? std::optional<bool>(reverified_) : std::nullopt};
  }

 private:
  CheckReport report_;
  bool failed_ = false;
  bool reverified_ = false;
};

// Instance helpers -----------------------------------------------------------

Json ball(double r = 1.0, Json p = 2, bool closed = true) {
  return Json{{"ball", {{"p", std::move(p)}, {"r", r}, {"closed", closed}}}};
}

Json uniform_product(const Json& body, std::size_t dim) { return Json{{"product", body}, {"dim", dim}}; }

Json square_hull() { return Json{{"hull", {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}}}; }

Json hexagon_hull() {
  return Json{{"hull", {{2, 0}, {1, 1.5}, {-1, 1.5}, {-2, 0}, {-1, -1.5}, {1, -1.5}}}};
}

Json mixed_product() {
  return Json{{"product", {square_hull(), ball(1.5, 1), hexagon_hull(), ball(0.5, "inf")}}, {"dim", 2}};
}

Json counterexample() { return Json{{"lambda_predicate", {{"rule", "abs_sum_lt"}, {"c", 2.0}}}}; }

Json absorbing_example() { return Json{{"lambda_predicate", {{"rule", "modulus_lt_or_one"}, {"c", 0.5}}}}; }

Json off_origin_product() {
  return Json{{"product", {Json{{"hull", {{1, 0}, {2, 0}, {1, 1}}}}, ball(), ball(), ball()}}, {"dim", 2}};
}

Json coordinate(std::initializer_list<int> kept) { return Json{{"coordinate", {{"kept", kept}, {"p", 2}}}}; }

Json canonical_norm() { return Json{{"canonical_norm", {2, 2, 2, 2}}}; }

Json with_set(const Json& set) { return Json{{"set", set}}; }

Json seminorm_instance(const Json& p, std::size_t dim) { return Json{{"seminorm", p}, {"dim", dim}}; }

Json family_instance(const Json& f, std::size_t dim) { return Json{{"family", f}, {"dim", dim}}; }

H2Set instance_set(const Json& j) { return set_from_json(j.at("set")); }

std::size_t instance_dim(const Json& j, std::size_t fallback) {
  return j.contains("dim") ? j["dim"].get<std::size_t>() : fallback;
}

std::optional<std::string> predicate_rule(const Json& j) {
  if (!j.contains("set") || !j["set"].contains("lambda_predicate")) return std::nullopt;
  return j["set"]["lambda_predicate"].at("rule").get<std::string>();
}

std::vector<HVector> default_probes(std::size_t dim, std::uint64_t seed) {
  std::vector<HVector> out;
  for (std::size_t t = 0; out.size() < 16; ++t) {
    Rng rng = Rng::stream(seed, t);
    HVector x = sample_vector(dim, t, rng);
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  return out;
}

std::vector<HVector> instance_probes(const Json& j, std::size_t dim, std::uint64_t seed) {
  if (!j.contains("probes")) return default_probes(dim, seed);
  std::vector<HVector> out;
  for (const auto& p : j["probes"]) out.push_back(hvector_from_json(p));
  return out;
}

bool symmetric_product(const H2Set& s) {
  return s.is_product() && std::ranges::all_of(s.product().parts, [](const auto& b) { return is_origin_symmetric(b); });
}

bool interior_product(const H2Set& s) {
  return s.is_product() &&
         std::ranges::all_of(s.product().parts, [&](const auto& b) { return origin_interior(b, s.dim()); });
}

std::optional<Expectation> pass_if(bool b) { return b ? std::optional(Expectation::Pass) : std::nullopt; }

// Rules ---------------------------------------------------------------------

std::optional<Expectation> balanced_rule(const Json& j) {
  if (predicate_rule(j) == "abs_sum_lt") return Expectation::Pass;
  return pass_if(j.contains("set") && symmetric_product(instance_set(j)));
}

std::optional<Expectation> absorbing_rule(const Json& j) {
  const auto rule = predicate_rule(j);
  if (rule == "abs_sum_lt" || rule == "modulus_lt_or_one") return Expectation::Pass;
  if (!j.contains("set")) return std::nullopt;
  const H2Set s = instance_set(j);
  if (!s.is_product()) return std::nullopt;
  return interior_product(s) ? Expectation::Pass : Expectation::Fail;
}

std::optional<Expectation> stability_rule(const Json& j) {
  const auto rule = predicate_rule(j);
  if (rule == "modulus_lt_or_one") {
    return j["set"]["lambda_predicate"].at("c").get<double>() <= 1.0 ? std::optional(Expectation::Fail)
                                                                     : std::nullopt;
  }
  if (rule == "abs_sum_lt") return Expectation::Pass;
  if (!j.contains("set")) return std::nullopt;
  const H2Set s = instance_set(j);
  return pass_if(s.is_product() && contains(s, HVector(s.dim())));
}

std::optional<Expectation> product_rule(const Json& j) {
  if (predicate_rule(j) == "abs_sum_lt") return Expectation::Fail;
  if (predicate_rule(j) == "seminorm_ball") return Expectation::Pass;
  return pass_if(j.contains("set") && instance_set(j).is_product());
}

std::optional<Expectation> minkowski_rule(const Json& j) {
  if (!j.contains("set")) return std::nullopt;
  const H2Set s = instance_set(j);
  return pass_if(s.is_product() && contains(s, HVector(s.dim())));
}

std::optional<Expectation> seminorm_rule(const Json& j) {
  if (j.contains("map")) return Expectation::Fail;
  return pass_if(j.contains("seminorm"));
}

std::optional<Expectation> gauge_rule(const Json& j) {
  if (!j.contains("set")) return std::nullopt;
  const H2Set s = instance_set(j);
  return pass_if(symmetric_product(s) && interior_product(s));
}

std::optional<Expectation> interior_rule(const Json& j) {
  return pass_if(j.contains("set") && interior_product(instance_set(j)));
}

std::optional<Expectation> always_pass(const Json&) { return Expectation::Pass; }

std::optional<Expectation> separated_rule(const Json& j) {
  const SeminormFamily f = family_from_json(j.at("family"));
  const std::size_t dim = instance_dim(j, 1);
  const auto probes = default_probes(dim, 0);
  return is_separated(f, probes, 64, 0, 1e-12).passed() ? Expectation::Pass : Expectation::Fail;
}

std::optional<Expectation> bounded_rule(const Json& j) {
  return pass_if(j.contains("set") && instance_set(j).is_product());
}

// Runners -------------------------------------------------------------------

std::vector<Bihyperbolic> default_scaling_scalars() {
  std::vector<Bihyperbolic> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    Bihyperbolic::Lambda l{};
    for (std::size_t k = 0; k < 4; ++k) l[k] = (mask >> k) & 1U ? -1.0 : 1.0;
    out.push_back(Bihyperbolic::from_lambda(l));
  }
  out.push_back(Bihyperbolic::zero());
  out.push_back(Bihyperbolic::from_lambda(0.5, -2.0, 1.5, -0.25));
  out.push_back(Bihyperbolic::from_lambda(-3.0, 0.2, 1.0, -1.0));
  return out;
}

Outcome run_scaling(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  std::vector<Bihyperbolic> lambdas;
  if (j.contains("lambdas")) {
    for (const auto& l : j["lambdas"]) lambdas.push_back(number_from_json(l));
  } else {
    lambdas = default_scaling_scalars();
  }
  Chain c(o.seed);
  c.add(check_scaling(s, lambdas, o.trials, o.seed), [&](const Witness& w) { return reverify(s, w); });
  return c.done();
}

Outcome run_projection(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  Chain c(o.seed);
  auto rv = [&](const Witness& w) { return reverify(s, w); };
  c.add(check_projection_stable(s, o.trials, o.seed), rv) && c.add(check_slices_balanced(s, o.trials, o.seed), rv);
  return c.done();
}

Outcome run_absorbing(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  const auto probes = instance_probes(j, s.dim(), o.seed);
  Chain c(o.seed);
  c.add(check_absorbing(s, probes, o.trials, o.seed), [&](const Witness& w) { return reverify(s, w); });
  return c.done();
}

Outcome run_stability(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  Chain c(o.seed);
  c.add(check_projection_stable(s, o.trials, o.seed), [&](const Witness& w) { return reverify(s, w); });
  return c.done();
}

Outcome run_decomposition(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  Chain c(o.seed);
  c.add(check_decomposition(s, o.trials, o.seed), [&](const Witness& w) { return reverify(s, w); });
  return c.done();
}

Outcome run_convexity(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  Chain c(o.seed);
  c.add(check_h2_convex(s, o.trials, o.seed), [&](const Witness& w) { return reverify(s, w); });
  return c.done();
}

Outcome run_minkowski(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  std::vector<std::vector<int>> groups;
  if (j.contains("indices")) {
    groups = j["indices"].get<std::vector<std::vector<int>>>();
  } else {
    for (int a = 1; a <= 4; ++a) {
      for (int b = a + 1; b <= 4; ++b) groups.push_back({a, b});
    }
    for (int skip = 4; skip >= 1; --skip) {
      std::vector<int> g;
      for (int i = 1; i <= 4; ++i) {
        if (i != skip) g.push_back(i);
      }
      groups.push_back(g);
    }
  }
  Chain c(o.seed);
  for (const auto& g : groups) {
    if (!c.add(minkowski_sum_subset_check(s, g, o.trials, o.seed), [&](const Witness& w) { return reverify(s, w); })) {
      break;
    }
  }
  return c.done();
}

Outcome run_seminorm(const Json& j, const RunOptions& o) {
  const std::size_t dim = instance_dim(j, 1);
  Chain c(o.seed);
  if (j.contains("map")) {
    if (j["map"] != "identity") throw Error(ErrorCode::InvalidInput, "unknown map; only \"identity\" is known");
    if (dim != 1) throw Error(ErrorCode::InvalidInput, "the identity map needs dim 1");
    const SeminormFn f = [](const HVector& x) { return x.entry(0); };
    c.add(check_seminorm_axioms(f, dim, o.trials, o.seed, o.tol), [&](const Witness& w) { return reverify(f, w, o.tol); });
    return c.done();
  }
  const Seminorm p = seminorm_from_json(j.at("seminorm"));
  const SeminormFn f = as_function(p);
  auto rv = [&](const Witness& w) { return reverify(f, w, o.tol); };
  c.add(check_seminorm_axioms(p, dim, o.trials, o.seed, o.tol), rv) &&
      c.add(kernel_check(p, dim, o.trials, o.seed, o.tol), rv);
  return c.done();
}

Outcome run_unit_sets(const Json& j, const RunOptions& o) {
  const Seminorm p = seminorm_from_json(j.at("seminorm"));
  const std::size_t dim = instance_dim(j, p.fixed_dim().value_or(1));
  const auto probes = instance_probes(j, dim, o.seed);
  Chain c(o.seed);
  for (bool strict : {true, false}) {
    const H2Set u = unit_ball(p, dim, strict);
    auto rv = [&](const Witness& w) { return reverify(u, w); };
    if (!(c.add(check_h2_convex(u, o.trials, o.seed), rv) && c.add(check_balanced(u, o.trials, o.seed), rv) &&
          c.add(check_absorbing(u, probes, o.trials, o.seed), rv))) {
      break;
    }
  }
  return c.done();
}

Outcome run_gauge_seminorm(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  const Seminorm p{GaugeSeminorm{s.product()}};
  const SeminormFn f = as_function(p);
  Chain c(o.seed);
  c.add(check_seminorm_axioms(p, s.dim(), o.trials, o.seed, o.tol), [&](const Witness& w) { return reverify(f, w, o.tol); });
  return c.done();
}

Outcome run_gauge_norm(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  Chain c(o.seed);
  c.add(check_gauge_definite(s.product(), o.trials, o.seed, 1e-7),
        [&](const Witness& w) { return reverify_gauge(s.product(), w, 1e-7); });
  return c.done();
}

Outcome run_sandwich(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  Chain c(o.seed);
  c.add(check_sandwich(s.product(), o.trials, o.seed, 1e-7),
        [&](const Witness& w) { return reverify_gauge(s.product(), w, 1e-7); });
  return c.done();
}

Outcome run_sup_family(const Json& j, const RunOptions& o) {
  const SeminormFamily f = family_from_json(j.at("family"));
  const std::size_t dim = instance_dim(j, 1);
  const Seminorm q = sup_family(f.members, f.members.size());
  const SeminormFn fq = as_function(q);
  Chain c(o.seed);
  c.add(check_sup_monotone(f, dim, o.trials, o.seed, o.tol), [&](const Witness& w) { return reverify(f, w, o.tol); }) &&
      c.add(check_seminorm_axioms(q, dim, o.trials, o.seed, o.tol), [&](const Witness& w) { return reverify(fq, w, o.tol); });
  return c.done();
}

H2Metric instance_metric(const Json& j) {
  H2Metric m{family_from_json(j.at("family")), kDefaultTruncation};
  if (j.contains("truncation")) m.truncation = j["truncation"].get<std::size_t>();
  return m;
}

Outcome run_metric(const Json& j, const RunOptions& o) {
  const H2Metric m = instance_metric(j);
  const std::size_t dim = instance_dim(j, 1);
  Chain c(o.seed);
  auto rv = [&](const Witness& w) { return reverify(m, w, o.tol); };
  if (c.add(check_metric_axioms(m, dim, o.trials, o.seed, o.tol), rv) && m.truncation > 1) {
    c.add(check_truncation_tail(m.family, 1, m.truncation, dim, o.trials, o.seed, o.tol), [](const Witness&) {
      return true;
    });
  }
  return c.done();
}

Outcome run_continuity(const Json& j, const RunOptions& o) {
  const H2Metric m = instance_metric(j);
  const std::size_t dim = instance_dim(j, 1);
  Chain c(o.seed);
  if (!c.add(check_module_continuity(m, dim, o.trials, o.seed, o.tol), [&](const Witness& w) { return reverify(m, w, o.tol); })) {
    return c.done();
  }
  for (const auto& p : m.family.members) {
    if (!c.add(check_seminorm_continuity(p, m, dim, o.trials, o.seed, o.tol), [](const Witness&) { return true; })) break;
  }
  return c.done();
}

Outcome run_local_convexity(const Json& j, const RunOptions& o) {
  const SeminormFamily f = family_from_json(j.at("family"));
  const std::size_t dim = instance_dim(j, 1);
  const HVector center = j.contains("center") ? hvector_from_json(j["center"]) : HVector(dim);
  const Bihyperbolic eps = j.contains("epsilon") ? number_from_json(j["epsilon"]) : Bihyperbolic::one();
  const Neighborhood u(center, eps, f.members);
  const H2Set s = neighborhood_set(u);
  auto rv = [&](const Witness& w) { return reverify(s, w); };
  Chain c(o.seed);
  if (c.add(check_h2_convex(s, o.trials, o.seed), rv) && center.is_zero()) {
    c.add(check_balanced(s, o.trials, o.seed), rv) &&
        c.add(check_absorbing(s, default_probes(dim, o.seed), o.trials, o.seed), rv);
  }
  return c.done();
}

Outcome run_bounded(const Json& j, const RunOptions& o) {
  const H2Set s = instance_set(j);
  std::vector<Seminorm> seminorms;
  Bihyperbolic eps = Bihyperbolic::one();
  if (j.contains("neighborhood")) {
    const Json& n = j["neighborhood"];
    seminorms = family_from_json(n.at("seminorms")).members;
    if (n.contains("epsilon")) eps = number_from_json(n["epsilon"]);
  } else {
    seminorms.push_back(Seminorm{CanonicalNorm{}});
  }
  const int cap = j.contains("cap") ? j["cap"].get<int>() : 20;
  const Neighborhood u(HVector(s.dim()), eps, seminorms);
  Chain c(o.seed);
  c.add(bounded_check(s, u, cap, o.trials, o.seed), [&](const Witness& w) {
    return w.points.size() == 1 && w.scalars.size() == 1 && contains(s, w.points[0]) &&
           !neighborhood_contains(Neighborhood(HVector(s.dim()), w.scalars[0] * eps, seminorms), w.points[0]);
  });
  return c.done();
}

std::vector<PropertyEntry> build_registry() {
  const Json unit2 = with_set(uniform_product(ball(), 2));
  const Json unit1 = with_set(uniform_product(ball(), 1));
  const Json open2 = with_set(uniform_product(ball(1.0, 2, false), 2));
  const Json mixed = with_set(mixed_product());
  const Json fail = Json{{"expect", "fail"}};

  std::vector<PropertyEntry> r;
  auto add = [&r](std::string id, std::string statement, std::vector<Json> instances, Rule rule, Runner run) {
    r.push_back({std::move(id), std::move(statement), std::move(instances), std::move(rule), std::move(run)});
  };

  Json unit1_j1 = unit1;
  unit1_j1["lambdas"] = Json::array({"j1"});
  add("T1.scaling", "λS = |λ|S for balanced S, when |λ| = 1 or λ is not a zero divisor",
      {unit2, mixed, unit1_j1}, balanced_rule, run_scaling);
  add("T2.projection", "eᵢS ⊂ S and every eᵢ-slice is balanced, for balanced S",
      {unit2, mixed, with_set(counterexample())}, balanced_rule, run_projection);
  add("A.absorbing", "for every x there is ε ≻ 0 with t·x ∈ S whenever 0 ⪯ t ⪯ ε",
      {with_set(absorbing_example()), unit2, mixed, with_set(off_origin_product())}, absorbing_rule, run_absorbing);
  add("A.ei-stability", "eᵢS ⊂ S for every i", {with_set(absorbing_example()), unit2}, stability_rule, run_stability);
  add("T4.decomposition", "S = Σ eᵢS for H2-convex S", {with_set(counterexample()), unit2, mixed}, product_rule,
      run_decomposition);

  Json gauge_ball = Json{{"lambda_predicate",
                          {{"rule", "seminorm_ball"}, {"seminorms", Json::array({Json{{"gauge", mixed_product()}}})}, {"strict", true}}}};
  add("T5.convexity", "Σ eᵢSᵢ with convex Sᵢ is H2-convex: λx + (1 − λ)y ∈ S for 0 ⪯ λ ⪯ 1",
      {unit2, mixed, with_set(gauge_ball)}, product_rule, run_convexity);
  add("T5-convexity-fail", "λx + (1 − λ)y ∈ S for x, y ∈ S and 0 ⪯ λ ⪯ 1, on a set that is not an idempotent product",
      {with_set(counterexample())}, product_rule, run_convexity);

  Json triangle = with_set(Json{{"product", {Json{{"hull", {{2, -1}, {-1, 2}, {-1, -1}}}}, ball(), ball(0.5, 1), ball(2.0, "inf")}},
                                {"dim", 2}});
  add("T8.minkowski-sum", "eᵢS + eⱼS ⊂ S and eᵢS + eⱼS + eₖS ⊂ S for H2-convex S containing 0",
      {unit2, mixed, triangle}, minkowski_rule, run_minkowski);

  add("T12.seminorm",
      "p(0) = 0, p ⪰ 0, p(λx) = |λ|p(x), p(x + y) ⪯ p(x) + p(y), |p(x) − p(y)| ⪯ p(x − y), and ker p is a submodule",
      {seminorm_instance(canonical_norm(), 2), seminorm_instance(coordinate({1}), 1),
       seminorm_instance(Json{{"gauge", mixed_product()}}, 2),
       seminorm_instance(Json{{"sup", Json::array({coordinate({1}), coordinate({3, 4})})}}, 2), Json{{"map", "identity"}, {"dim", 1}}},
      seminorm_rule, run_seminorm);
  add("T14.unit-sets", "{p ≺ 1} and {p ⪯ 1} are H2-convex, H2-balanced and H2-absorbing",
      {seminorm_instance(canonical_norm(), 2), seminorm_instance(coordinate({1}), 1),
       seminorm_instance(Json{{"gauge", mixed_product()}}, 2)},
      always_pass, run_unit_sets);
  add("T15.gauge-seminorm", "the gauge q_S of a convex, balanced, absorbing S is an H2-valued seminorm",
      {unit2, mixed, open2}, gauge_rule, run_gauge_seminorm);
  add("C.gauge-norm", "q_S(x) = 0 implies x = 0 for bounded S", {unit2, mixed}, interior_rule, run_gauge_norm);
  add("S.sandwich",
      "{q_S ≺ 1} ⊂ S ⊂ {q_S ⪯ 1}, with S = {q_S ⪯ 1} for closed S and S = {q_S ≺ 1} for open S",
      {unit2, open2, mixed}, interior_rule, run_sandwich);
  add("L.sup-family", "q_m = sup(p₁, .., p_m) satisfies q_m ⪯ q_{m+1}, is a seminorm, and is separated when p₁..p_m are",
      {family_instance(Json::array({coordinate({1}), coordinate({2})}), 1),
       family_instance(Json::array({coordinate({1}), coordinate({2, 3, 4}), canonical_norm()}), 2)},
      always_pass, run_sup_family);
  add("M.metric-axioms",
      "d(x, y) = Σ 2⁻ⁿ pₙ(x − y)(1 + pₙ(x − y))⁻¹ is a translation-invariant H2-valued metric for a separated family",
      {family_instance(Json::array({canonical_norm()}), 2), family_instance(Json::array({coordinate({1}), coordinate({2, 3, 4})}), 1),
       family_instance(Json::array({coordinate({1})}), 1)},
      separated_rule, run_metric);
  add("M.continuity", "addition, scalar action and the family's seminorms are sequentially continuous in d",
      {family_instance(Json::array({canonical_norm()}), 2), family_instance(Json::array({coordinate({1}), coordinate({2, 3, 4})}), 1)},
      always_pass, run_continuity);

  Json shifted = family_instance(Json::array({canonical_norm(), coordinate({2})}), 2);
  shifted["epsilon"] = {0.5, 1.0, 2.0, 1.0};
  Json centered = shifted;
  shifted["center"] = Json{{"dim", 2}, {"comps", {{1, -1}, {0, 0}, {2, 0.5}, {-1, 3}}}};
  add("M.local-convexity", "U(x, ε, p₁..pₙ) is H2-convex, and H2-balanced and H2-absorbing when x = 0",
      {centered, shifted}, always_pass, run_local_convexity);

  Json radius3 = with_set(uniform_product(ball(3.0), 2));
  Json origin = with_set(Json{{"product", Json{{"hull", Json::array({Json::array({0, 0})})}}}, {"dim", 2}});
  Json strip = with_set(Json{{"lambda_predicate",
                              {{"rule", "seminorm_ball"}, {"seminorms", Json::array({coordinate({1})})}, {"dim", 1}, {"box", 1.0}}}});
  strip.update(fail);
  add("B.bounded", "S ⊂ λU for some λ ≻ 0", {radius3, origin, strip}, bounded_rule, run_bounded);
  return r;
}

Json normalize_instance(const Json& instance) {
  if (!instance.is_object()) throw Error(ErrorCode::BadInstance, "instance must be a JSON object");
  if (instance.contains("product") || instance.contains("lambda_predicate")) return with_set(instance);
  return instance;
}

std::optional<Expectation> resolve_expectation(const PropertyEntry& e, const Json& instance) {
  if (instance.contains("expect")) {
    const auto s = instance["expect"].get<std::string>();
    if (s == "pass") return Expectation::Pass;
    if (s == "fail") return Expectation::Fail;
    if (s == "none") return std::nullopt;
    throw Error(ErrorCode::BadInstance, "expect must be \"pass\", \"fail\" or \"none\"");
  }
  return e.expectation(instance);
}

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

}  // namespace

std::string_view expectation_name(Expectation e) noexcept { return e == Expectation::Pass ? "Pass" : "Fail"; }

const std::vector<PropertyEntry>& registry() {
  static const std::vector<PropertyEntry> entries = build_registry();
  return entries;
}

const PropertyEntry& find_property(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::UnknownProperty, "unknown property '" + id + "'");
}

bool PropertyResult::as_expected() const {
  if (!expected) return true;
  if (*expected == Expectation::Pass) return outcome.report.passed();
  return !outcome.report.passed() && outcome.witness_reverified.value_or(false);
}

bool VerifyReport::all_as_expected() const {
  return std::ranges::all_of(results, [](const PropertyResult& r) { return r.as_expected(); });
}

PropertyResult verify(const std::string& id, const Json& raw_instance, const RunOptions& options) {
  const PropertyEntry& entry = find_property(id);
  if (options.trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  const Json instance = normalize_instance(raw_instance);
  PropertyResult out;
  out.id = id;
  out.instance = instance;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.expected = resolve_expectation(entry, instance);
    out.outcome = entry.run(instance, options);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadInstance, std::string("instance for ") + id + ": " + e.what());
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::InvalidInput:
      case ErrorCode::DimensionMismatch:
      case ErrorCode::BadIndex:
      case ErrorCode::UnsupportedSet:
        throw Error(ErrorCode::BadInstance, std::string("instance for ") + id + ": " + e.what());
      default:
        throw;
    }
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

VerifyReport run_default_suite(const RunOptions& options, const std::vector<std::string>& ids) {
  VerifyReport report{options, {}};
  for (const auto& e : registry()) {
    if (!ids.empty() && std::ranges::find(ids, e.id) == ids.end()) continue;
    for (const auto& instance : e.default_instances) report.results.push_back(verify(e.id, instance, options));
  }
  for (const auto& id : ids) find_property(id);
  return report;
}

VerifyReport run_suite_config(const Json& config) {
  if (!config.is_object()) config_error("config must be a JSON object");
  if (config.empty()) config_error("config is empty");
  RunOptions options;
  std::vector<std::string> ids;
  for (const auto& [key, value] : config.items()) {
    if (key == "seed") {
      if (!value.is_number_unsigned()) config_error("seed must be a nonnegative integer");
      options.seed = value.get<std::uint64_t>();
    } else if (key == "trials") {
      if (!value.is_number_unsigned() || value.get<std::size_t>() == 0) config_error("trials must be a positive integer");
      options.trials = value.get<std::size_t>();
    } else if (key == "tol") {
      if (!value.is_number() || !(value.get<double>() > 0.0)) config_error("tol must be a positive number");
      options.tol = value.get<double>();
    } else if (key == "properties") {
      if (!value.is_array()) config_error("properties must be an array of ids");
      for (const auto& id : value) {
        if (!id.is_string()) config_error("properties must be an array of ids");
        ids.push_back(id.get<std::string>());
      }
    } else {
      config_error("unknown config key '" + key + "'");
    }
  }
  return run_default_suite(options, ids);
}

VerifyReport run_suite(const std::filesystem::path& config) {
  std::ifstream in(config);
  if (!in) config_error("cannot read config " + config.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) config_error("config is empty");
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  return run_suite_config(j);
}

Json result_to_json(const PropertyResult& r, bool include_time) {
  Json out = report_to_json(r.outcome.report);
  out["id"] = r.id;
  out["instance"] = r.instance;
  out["expected"] = r.expected ? Json(expectation_name(*r.expected)) : Json(nullptr);
  out["as_expected"] = r.as_expected();
  out["witness_reverified"] = r.outcome.witness_reverified ? Json(*r.outcome.witness_reverified) : Json(nullptr);
  if (include_time) out["wall_ms"] = r.wall_ms;
  return out;
}

Json verify_report_to_json(const VerifyReport& r, bool include_time) {
  Json results = Json::array();
  for (const auto& p : r.results) results.push_back(result_to_json(p, include_time));
  return Json{{"seed", r.options.seed},
              {"trials", r.options.trials},
              {"tol", r.options.tol},
              {"all_as_expected", r.all_as_expected()},
              {"results", results}};
}

Json registry_to_json() {
  Json out = Json::array();
  for (const auto& e : registry()) {
    Json instances = Json::array();
    for (const auto& i : e.default_instances) {
      const auto exp = resolve_expectation(e, normalize_instance(i));
      instances.push_back(Json{{"instance", i}, {"expected", exp ? Json(expectation_name(*exp)) : Json(nullptr)}});
    }
    out.push_back(Json{{"id", e.id}, {"statement", e.statement}, {"default_instances", instances}});
  }
  return out;
}

}  // namespace bihyp
