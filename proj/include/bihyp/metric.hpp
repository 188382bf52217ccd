#pragma once

#include <cstdint>
#include <vector>

#include "bihyp/report.hpp"
#include "bihyp/seminorm.hpp"
#include "bihyp/sets.hpp"

namespace bihyp {

inline constexpr std::size_t kDefaultTruncation = 40;

/// d(x, y) = Σ_{n ≤ N} 2⁻ⁿ pₙ(u)·(1 + pₙ(u))⁻¹ with u = x − y. A family with
/// fewer than N members contributes one term per member.
struct H2Metric {
  SeminormFamily family;
  std::size_t truncation = kDefaultTruncation;
};

Bihyperbolic metric_eval(const H2Metric& metric, const HVector& x, const HVector& y);

/// Identity (after a separation pre-check on structured probes),
/// nonnegativity, symmetry, triangle inequality and translation invariance.
CheckReport check_metric_axioms(const H2Metric& metric, std::size_t dim, std::size_t trials, std::uint64_t seed,
                                double tol);

/// For N < N': d_N ⪯ d_N' and d_N' − d_N ⪯ 2^{−N}.
CheckReport check_truncation_tail(const SeminormFamily& family, std::size_t n, std::size_t n_prime, std::size_t dim,
                                  std::size_t trials, std::uint64_t seed, double tol);

/// Along xₖ → x, yₖ → y, λₖ → λ, the images xₖ + yₖ and λₖxₖ converge in
/// the metric.
CheckReport check_module_continuity(const H2Metric& metric, std::size_t dim, std::size_t trials, std::uint64_t seed,
                                    double tol);

/// p(xₖ) → p(x) along metric-convergent sequences.
CheckReport check_seminorm_continuity(const Seminorm& p, const H2Metric& metric, std::size_t dim,
                                      std::size_t trials, std::uint64_t seed, double tol);

/// U(x, ε, p₁..pₙ) = {y : pₖ(y − x) ≺ ε for every k}, with ε ≻ 0.
class Neighborhood {
 public:
  /// Throws InvalidInput unless ε ≻ 0 and at least one seminorm is given.
  Neighborhood(HVector center, const Bihyperbolic& epsilon, std::vector<Seminorm> seminorms);

  [[nodiscard]] const HVector& center() const noexcept { return center_; }
  [[nodiscard]] const Bihyperbolic& epsilon() const noexcept { return epsilon_; }
  [[nodiscard]] const std::vector<Seminorm>& seminorms() const noexcept { return seminorms_; }

 private:
  HVector center_;
  Bihyperbolic epsilon_;
  std::vector<Seminorm> seminorms_;
};

bool neighborhood_contains(const Neighborhood& u, const HVector& y);
/// The neighborhood as a predicate set.
H2Set neighborhood_set(const Neighborhood& u);

/// Smallest λ = 2ᵏ (k <= search_cap) with sampled points of S inside λU.
/// `found` holds λ on success. U must be centered at the origin.
CheckReport bounded_check(const H2Set& set, const Neighborhood& u, int search_cap, std::size_t trials,
                          std::uint64_t seed);

bool reverify(const H2Metric& metric, const Witness& witness, double tol);

}  // namespace bihyp
