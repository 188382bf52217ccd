#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "bihyp/bihyperbolic.hpp"

namespace bihyp {

/// Element of the free module H2ⁿ. Entry k is the bihyperbolic number whose
/// idempotent coordinates are (comps[0][k], .., comps[3][k]); equivalently
/// x = Σ eᵢ·vᵢ with vᵢ = comps[i] a real n-vector.
class HVector {
 public:
  using Components = std::array<std::vector<double>, 4>;

  /// Zero vector of dimension `dim` (dim >= 1).
  explicit HVector(std::size_t dim = 1);

  /// Throws DimensionMismatch on ragged components, InvalidInput on
  /// non-finite entries or zero length.
  static HVector from_components(Components comps);
  static HVector from_entries(std::span<const Bihyperbolic> entries);
  /// Every entry equal to `value`.
  static HVector constant(std::size_t dim, const Bihyperbolic& value);
  static HVector scalar(const Bihyperbolic& value) { return constant(1, value); }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const Components& comps() const noexcept { return comps_; }
  /// Component vector for index i in 0..3.
  [[nodiscard]] std::span<const double> component(std::size_t i) const noexcept { return comps_[i]; }
  [[nodiscard]] Bihyperbolic entry(std::size_t k) const;

  [[nodiscard]] bool is_zero(double tol = 0.0) const noexcept;
  [[nodiscard]] double max_abs() const noexcept;

  HVector& operator+=(const HVector& o);
  HVector& operator-=(const HVector& o);
  HVector& operator*=(double s) noexcept;

  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
  friend HVector operator-(HVector a) noexcept { return a *= -1.0; }
  friend HVector operator*(double s, HVector a) noexcept { return a *= s; }
  friend HVector operator*(const Bihyperbolic& lambda, HVector x) noexcept;

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::size_t dim_;
  Components comps_;
};

HVector vec_add(const HVector& x, const HVector& y);
/// Scalar action: component i is multiplied by λᵢ.
HVector vec_scale(const Bihyperbolic& lambda, const HVector& x) noexcept;
/// eᵢ·x for i in 1..4. Throws BadIndex.
HVector project(const HVector& x, int i);

void require_same_dim(const HVector& x, const HVector& y);

/// Real p-norm used on one idempotent component space.
enum class ComponentNorm { P1, P2, PInf };

double component_norm(ComponentNorm p, std::span<const double> v) noexcept;

/// ‖x‖ = Σ ‖vᵢ‖ᵢ eᵢ with one real norm per component.
struct CanonicalNorm {
  std::array<ComponentNorm, 4> norms{ComponentNorm::P2, ComponentNorm::P2, ComponentNorm::P2,
                                     ComponentNorm::P2};

  static CanonicalNorm uniform(ComponentNorm p) { return {{p, p, p, p}}; }
  friend bool operator==(const CanonicalNorm&, const CanonicalNorm&) = default;
};

Bihyperbolic canonical_norm_eval(const CanonicalNorm& norm, const HVector& x);

}  // namespace bihyp
