#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bihyp/hvector.hpp"
#include "bihyp/report.hpp"
#include "bihyp/sets.hpp"

namespace bihyp {

/// p(x) = Σ_{i ∈ kept} ‖vᵢ‖ eᵢ. Components outside `kept` form the kernel.
struct CoordinateSeminorm {
  std::array<bool, 4> kept{true, false, false, false};
  ComponentNorm base = ComponentNorm::P2;

  static CoordinateSeminorm keep(std::initializer_list<int> indices, ComponentNorm base = ComponentNorm::P2);
};

/// Minkowski gauge of a product set.
struct GaugeSeminorm {
  Product set;
};

struct Seminorm;

/// Componentwise supremum of its members.
struct SupFamily {
  std::vector<Seminorm> members;
};

struct Seminorm {
  std::variant<CanonicalNorm, CoordinateSeminorm, GaugeSeminorm, SupFamily> form;

  /// Dimension the seminorm is tied to, if any (gauges inherit their set's).
  [[nodiscard]] std::optional<std::size_t> fixed_dim() const;
};

/// Ordered, nonempty list of seminorms.
struct SeminormFamily {
  std::vector<Seminorm> members;
};

using SeminormFn = std::function<Bihyperbolic(const HVector&)>;

Bihyperbolic eval(const Seminorm& p, const HVector& x);
SeminormFn as_function(const Seminorm& p);

/// {x : p(x) ≺ 1} when strict, {x : p(x) ⪯ 1} otherwise.
H2Set unit_ball(const Seminorm& p, std::size_t dim, bool strict);

/// p(0) = 0, p ⪰ 0, homogeneity (null-cone scalars first), subadditivity and
/// the reverse triangle inequality, all with relative slack `tol`.
CheckReport check_seminorm_axioms(const SeminormFn& p, std::size_t dim, std::size_t trials,
                                  std::uint64_t seed, double tol);
CheckReport check_seminorm_axioms(const Seminorm& p, std::size_t dim, std::size_t trials,
                                  std::uint64_t seed, double tol);

/// Kernel elements built in the killed components are closed under addition
/// and scalar action.
CheckReport kernel_check(const Seminorm& p, std::size_t dim, std::size_t trials, std::uint64_t seed,
                         double tol);

/// Every nonzero probe (and random nonzero point) has a member with p(x) ≠ 0.
CheckReport is_separated(const SeminormFamily& family, std::span<const HVector> probes, std::size_t trials,
                         std::uint64_t seed, double tol);

/// q_m = sup of the first m members. Throws BadIndex unless 1 <= m <= size.
Seminorm sup_family(std::span<const Seminorm> members, std::size_t m);

/// q_m ⪯ q_{m+1} on samples for every m, and q_m separated whenever the
/// first m members are.
CheckReport check_sup_monotone(const SeminormFamily& family, std::size_t dim, std::size_t trials,
                               std::uint64_t seed, double tol);

/// Random test vectors: structured unit and idempotent vectors first, then
/// sparse and dense draws with entries in [-scale, scale].
HVector sample_vector(std::size_t dim, std::size_t trial, Rng& rng, double scale = 2.0);

/// Scalars exercising every null-cone branch, then signs and j's.
std::vector<Bihyperbolic> degenerate_scalars();

/// a ⪯ b allowing slack tol·max(1, |a|, |b|) per component.
bool precedes_rel(const Bihyperbolic& a, const Bihyperbolic& b, double tol) noexcept;
bool approx_equal(const Bihyperbolic& a, const Bihyperbolic& b, double tol) noexcept;

bool reverify(const SeminormFn& p, const Witness& witness, double tol);
/// Separation and Monotonicity witnesses of a family.
bool reverify(const SeminormFamily& family, const Witness& witness, double tol);

}  // namespace bihyp
