#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace bihyp {

/// Default absolute tolerance for null-cone membership on |λₖ|.
inline constexpr double kNullConeTol = 1e-12;

/// Coefficients of 1, j1, j2, j3.
struct CanonicalCoords {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;

  friend bool operator==(const CanonicalCoords&, const CanonicalCoords&) = default;
};

/// An element of the bihyperbolic ring H2, stored in idempotent coordinates
/// ⟨λ1, λ2, λ3, λ4⟩ with respect to e1..e4. Multiplication, order, modulus
/// and inverse are all componentwise in this basis.
class Bihyperbolic {
 public:
  using Lambda = std::array<double, 4>;

  constexpr Bihyperbolic() noexcept = default;

  /// The real number r, i.e. r·1 = ⟨r, r, r, r⟩.
  constexpr explicit Bihyperbolic(double r) noexcept : lambda_{r, r, r, r} {}

  /// Throws InvalidInput on non-finite components.
  static Bihyperbolic from_lambda(const Lambda& lambda);
  static Bihyperbolic from_lambda(double l1, double l2, double l3, double l4) {
    return from_lambda(Lambda{l1, l2, l3, l4});
  }
  /// Throws InvalidInput on non-finite coefficients.
  static Bihyperbolic from_canonical(const CanonicalCoords& c);

  [[nodiscard]] CanonicalCoords to_canonical() const noexcept;

  [[nodiscard]] constexpr const Lambda& lambda() const noexcept { return lambda_; }
  [[nodiscard]] constexpr double operator[](std::size_t i) const noexcept { return lambda_[i]; }

  static constexpr Bihyperbolic zero() noexcept { return Bihyperbolic{}; }
  static constexpr Bihyperbolic one() noexcept { return Bihyperbolic{1.0}; }
  /// Idempotent eᵢ for i in 1..4. Throws BadIndex otherwise.
  static Bihyperbolic idempotent(int i);
  static Bihyperbolic j1() noexcept;
  static Bihyperbolic j2() noexcept;
  static Bihyperbolic j3() noexcept;

  Bihyperbolic& operator+=(const Bihyperbolic& o) noexcept;
  Bihyperbolic& operator-=(const Bihyperbolic& o) noexcept;
  Bihyperbolic& operator*=(const Bihyperbolic& o) noexcept;
  Bihyperbolic& operator*=(double s) noexcept;

  friend Bihyperbolic operator+(Bihyperbolic a, const Bihyperbolic& b) noexcept { return a += b; }
  friend Bihyperbolic operator-(Bihyperbolic a, const Bihyperbolic& b) noexcept { return a -= b; }
  friend Bihyperbolic operator*(Bihyperbolic a, const Bihyperbolic& b) noexcept { return a *= b; }
  friend Bihyperbolic operator*(Bihyperbolic a, double s) noexcept { return a *= s; }
  friend Bihyperbolic operator*(double s, Bihyperbolic a) noexcept { return a *= s; }
  friend Bihyperbolic operator-(Bihyperbolic a) noexcept;

  /// Bitwise-exact component equality.
  friend bool operator==(const Bihyperbolic&, const Bihyperbolic&) = default;

 private:
  Lambda lambda_{0.0, 0.0, 0.0, 0.0};
};

inline Bihyperbolic add(const Bihyperbolic& a, const Bihyperbolic& b) noexcept { return a + b; }
inline Bihyperbolic sub(const Bihyperbolic& a, const Bihyperbolic& b) noexcept { return a - b; }
inline Bihyperbolic neg(const Bihyperbolic& a) noexcept { return -a; }
inline Bihyperbolic mul(const Bihyperbolic& a, const Bihyperbolic& b) noexcept { return a * b; }

/// Componentwise reciprocal. Throws NotInvertible when some |λₖ| <= tol.
Bihyperbolic inverse(const Bihyperbolic& b, double tol = kNullConeTol);

bool is_in_null_cone(const Bihyperbolic& b, double tol = kNullConeTol) noexcept;
bool is_zero_divisor(const Bihyperbolic& b, double tol = kNullConeTol) noexcept;

/// H2-valued modulus ⟨|λ1|, |λ2|, |λ3|, |λ4|⟩.
Bihyperbolic modulus(const Bihyperbolic& b) noexcept;

enum class Ordering { Equal, Less, Greater, Incomparable };

/// Result of comparing two numbers in the componentwise partial order.
/// `strict` is set for Less/Greater when all four components differ strictly.
struct OrderRelation {
  Ordering kind = Ordering::Equal;
  bool strict = false;

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;
};

OrderRelation compare(const Bihyperbolic& a, const Bihyperbolic& b) noexcept;

/// a ⪯ b, allowing each component of a to exceed b by at most `slack`.
bool precedes(const Bihyperbolic& a, const Bihyperbolic& b, double slack = 0.0) noexcept;
/// a ≺ b: strict inequality in all four components.
bool strictly_precedes(const Bihyperbolic& a, const Bihyperbolic& b) noexcept;
/// b ∈ H2⁺.
bool is_nonnegative(const Bihyperbolic& b) noexcept;
/// b ≻ 0.
bool is_positive(const Bihyperbolic& b) noexcept;

/// Componentwise supremum / infimum of a finite nonempty list. Throws EmptySet.
Bihyperbolic sup_h2(std::span<const Bihyperbolic> values);
Bihyperbolic inf_h2(std::span<const Bihyperbolic> values);

/// Text form "x + y j1 + z j2 + w j3".
std::string to_canonical_string(const Bihyperbolic& b);

/// Parses the canonical text form, including shorthands such as "j1", "-2 j3",
/// "e2" or "1 + 0.5j1". Throws InvalidInput on malformed text.
Bihyperbolic parse_canonical_string(std::string_view text);

std::string_view ordering_name(Ordering o) noexcept;

}  // namespace bihyp
