#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bihyp/report.hpp"
#include "bihyp/sets.hpp"

namespace bihyp {

enum class GaugeMethod { LP, ClosedForm, Bisection };

std::string_view gauge_method_name(GaugeMethod m) noexcept;

struct GaugeResult {
  Bihyperbolic value;
  std::array<double, 4> per_component{};
  GaugeMethod method = GaugeMethod::ClosedForm;
};

/// Gauge of a hull or ball at x. Hulls must contain the origin in their
/// interior (OriginNotInterior otherwise); hulls are solved by the simplex.
double real_gauge(const RealConvexBody& body, std::span<const double> x, double tol = 1e-9);

/// Whether the origin is an interior point of the body.
bool origin_interior(const RealConvexBody& body, std::size_t dim);

/// q(x) = Σ eᵢ q_{Sᵢ}(vᵢ). Errors from a part name the component index.
GaugeResult h2_gauge(const Product& set, const HVector& x, double tol = 1e-9);

/// Independent gauge: doubling then bisection on a membership test that does
/// not use the simplex code.
double gauge_bisection(const RealConvexBody& body, std::span<const double> x, double tol = 1e-9);

/// Outward half-space aᵀv <= b.
struct HalfSpace {
  RealVector normal;
  double offset = 0.0;
};

/// Counter-clockwise convex hull of planar points (gift wrapping).
std::vector<RealVector> gift_wrap(std::span<const RealVector> points);
/// Facet half-spaces of a full-dimensional hull. Planar hulls use gift
/// wrapping; higher dimensions enumerate affinely independent vertex subsets.
std::vector<HalfSpace> hull_halfspaces(std::span<const RealVector> vertices);

/// {q ≺ 1} when strict, {q ⪯ 1} otherwise.
H2Set unit_sets(const Product& set, bool strict);

/// Membership chain {q ≺ 1} ⊂ S ⊂ {q ⪯ 1}, plus S = {q ⪯ 1} when every part
/// is closed and S = {q ≺ 1} when every part is an open ball. Points whose
/// gauge is within `margin` of 1 in some component skip the equalities.
CheckReport check_sandwich(const Product& set, std::size_t trials, std::uint64_t seed, double margin = 1e-7);

/// q(x) = 0 forces ‖x‖∞ <= tol on samples down to tiny scales.
CheckReport check_gauge_definite(const Product& set, std::size_t trials, std::uint64_t seed, double tol = 1e-7);

bool reverify_gauge(const Product& set, const Witness& witness, double margin);

}  // namespace bihyp
