#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bihyp/bihyperbolic.hpp"
#include "bihyp/hvector.hpp"
#include "bihyp/report.hpp"
#include "bihyp/rng.hpp"
#include "bihyp/simplex.hpp"

namespace bihyp {

/// Boundary tolerance for closed-set membership. Open sets compare strictly.
inline constexpr double kMembershipTol = 1e-9;

struct PolytopeHull {
  std::vector<RealVector> vertices;

  friend bool operator==(const PolytopeHull&, const PolytopeHull&) = default;
};

struct NormBall {
  ComponentNorm p = ComponentNorm::P2;
  double radius = 1.0;
  bool closed = true;

  friend bool operator==(const NormBall&, const NormBall&) = default;
};

/// Convex set in one idempotent component space. Balls are dimension-free;
/// a hull's dimension is its vertex length.
using RealConvexBody = std::variant<PolytopeHull, NormBall>;

RealConvexBody make_hull(std::vector<RealVector> vertices);
RealConvexBody make_ball(ComponentNorm p, double radius, bool closed);

bool body_contains(const RealConvexBody& body, std::span<const double> v);
/// Homothety by a real factor; factor 0 collapses to the hull {0} of `dim`.
RealConvexBody scale_body(const RealConvexBody& body, double factor, std::size_t dim);
bool is_origin_symmetric(const RealConvexBody& body);
/// Half-width of an axis box containing the body.
double body_extent(const RealConvexBody& body);

/// Idempotent product Σ eᵢSᵢ ⊂ H2ⁿ: x ∈ S ⟺ vᵢ ∈ Sᵢ for every i.
struct Product {
  std::array<RealConvexBody, 4> parts;
  std::size_t dim = 1;

  static Product uniform(std::size_t dim, const RealConvexBody& body);
  static Product balls(std::size_t dim, ComponentNorm p, double radius, bool closed) {
    return uniform(dim, make_ball(p, radius, closed));
  }
};

/// Validates vertex lengths against `dim` and rejects empty hulls.
Product make_product(std::array<RealConvexBody, 4> parts, std::size_t dim);

struct Seminorm;

enum class PredicateRule {
  /// Σ over every λ-coordinate of every entry of |·| < c.
  AbsSumLt,
  /// Every entry ξ has |ξ| ≺ c, or x = 1 (all entries equal to one).
  ModulusLtOrOne,
  /// p(x − center) ≺ ε for every listed seminorm (or ⪯ when not strict).
  SeminormBall,
};

/// Subset of H2ⁿ given by a membership rule on idempotent coordinates.
struct LambdaPredicate {
  PredicateRule rule = PredicateRule::AbsSumLt;
  std::size_t dim = 1;
  double c = 0.0;
  std::vector<std::shared_ptr<const Seminorm>> seminorms;
  std::optional<HVector> center;
  Bihyperbolic epsilon = Bihyperbolic::one();
  bool strict = true;
  /// Half-width of the sampling box around the center; 0 selects a default.
  double box = 0.0;
};

class H2Set {
 public:
  H2Set(Product p) : form_(std::move(p)) {}                 // NOLINT(google-explicit-constructor)
  H2Set(LambdaPredicate p) : form_(std::move(p)) {}         // NOLINT(google-explicit-constructor)

  [[nodiscard]] std::size_t dim() const noexcept;
  [[nodiscard]] bool is_product() const noexcept { return std::holds_alternative<Product>(form_); }
  [[nodiscard]] const Product& product() const;
  [[nodiscard]] const LambdaPredicate* predicate() const noexcept { return std::get_if<LambdaPredicate>(&form_); }
  [[nodiscard]] const std::variant<Product, LambdaPredicate>& form() const noexcept { return form_; }

 private:
  std::variant<Product, LambdaPredicate> form_;
};

H2Set abs_sum_lt(std::size_t dim, double c);
H2Set modulus_lt_or_one(std::size_t dim, double c);

bool contains(const H2Set& set, const HVector& x);
/// Part i scaled by λᵢ. Throws UnsupportedSet for predicate sets.
H2Set scale(const Bihyperbolic& lambda, const H2Set& set);
/// Whether the i-th component of x (i in 1..4) lies in the eᵢ-slice of the set.
bool in_slice(const H2Set& set, int i, const HVector& x);

// Sampling ------------------------------------------------------------------

/// Per-component half-widths of the box the samplers draw from.
std::array<double, 4> sampling_box(const H2Set& set);
/// Deterministic structured points in the sampling box: the all-ones, eᵢ,
/// eᵢ+eⱼ and eᵢ+eⱼ+eₖ patterns at 3/4 and 3/8 of the half-width (larger
/// first unless `small_first`), then the origin and the vector 1.
/// `members_only` filters by membership.
std::vector<HVector> structured_points(const H2Set& set, bool members_only, bool small_first = false);
/// Member of the set. Throws SamplingFailure when none is found.
HVector sample_member(const H2Set& set, Rng& rng);
/// Uniform point of the sampling box, inflated by `inflate`.
HVector sample_box(const H2Set& set, Rng& rng, double inflate = 1.0);
/// Point on (or, for open sets, just inside) the boundary of a product set.
HVector sample_boundary(const Product& set, Rng& rng);

/// Scalars 0, 1, eᵢ, eᵢ+eⱼ, eᵢ+eⱼ+eₖ in that order.
std::vector<Bihyperbolic> degenerate_unit_interval();
/// Scalars with |λ| ⪯ 1, starting with the null-cone and unit-modulus cases.
std::vector<Bihyperbolic> degenerate_unit_ball();

// Checks --------------------------------------------------------------------

CheckReport check_h2_convex(const H2Set& set, std::size_t trials, std::uint64_t seed);
CheckReport check_balanced(const H2Set& set, std::size_t trials, std::uint64_t seed);
CheckReport check_absorbing(const H2Set& set, std::span<const HVector> probes, std::size_t trials,
                            std::uint64_t seed);
CheckReport check_decomposition(const H2Set& set, std::size_t trials, std::uint64_t seed);
/// Σ e_{iₖ}xₖ ∈ S for members xₖ; `indices` are 2 or 3 distinct values in 1..4.
CheckReport minkowski_sum_subset_check(const H2Set& set, std::span<const int> indices, std::size_t trials,
                                       std::uint64_t seed);
/// eᵢx ∈ S for members x and every i.
CheckReport check_projection_stable(const H2Set& set, std::size_t trials, std::uint64_t seed);
/// a·eᵢx stays in the eᵢ-slice for members x and real |a| ≤ 1.
CheckReport check_slices_balanced(const H2Set& set, std::size_t trials, std::uint64_t seed);
/// λS and |λ|S agree on sampled points, for every listed λ.
CheckReport check_scaling(const H2Set& set, std::span<const Bihyperbolic> lambdas, std::size_t trials,
                          std::uint64_t seed);

/// Re-checks a set-property witness from its payload alone.
bool reverify(const H2Set& set, const Witness& witness);

}  // namespace bihyp
