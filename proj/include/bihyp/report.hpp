#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bihyp/bihyperbolic.hpp"
#include "bihyp/hvector.hpp"

namespace bihyp {

enum class Verdict { CertifiedPass, SampledPass, Fail };

/// Which property a witness violates. The payload layout per kind is listed
/// next to each enumerator (points / scalars / indices).
enum class WitnessKind {
  ConvexCombination,    // x, y / λ            : x, y ∈ S, λx + (1−λ)y ∉ S
  BalancedScaling,      // x / λ               : x ∈ S, |λ| ⪯ 1, λx ∉ S
  NotAbsorbed,          // x / t               : t ⪯ smallest ε tried, t·x ∉ S
  Decomposition,        // x                   : x ∈ S disagrees with the slice test
  MinkowskiSum,         // x₁.. / - / i₁..     : xₖ ∈ S, Σ e_{iₖ} xₖ ∉ S
  ProjectionStability,  // x, eᵢx / - / i      : x ∈ S, eᵢx ∉ S
  SliceBalance,         // x / a / i           : x ∈ S, a real |a| ≤ 1, a·eᵢx ∉ eᵢS
  ScalingEquality,      // x / λ, μ            : x ∈ λS xor x ∈ μS
  SandwichInclusion,    // x / - / stage       : an inclusion of the unit-set chain fails
  SeminormNegative,     // x                   : p(x) not ⪰ 0
  SeminormAtZero,       // 0                   : p(0) ≠ 0
  Homogeneity,          // x / λ               : p(λx) ≠ |λ| p(x)
  Subadditivity,        // x, y                : p(x+y) not ⪯ p(x) + p(y)
  ReverseTriangle,      // x, y                : |p(x) − p(y)| not ⪯ p(x − y)
  KernelClosure,        // k₁, k₂ / λ          : kernel not closed under + or λ·
  Separation,           // x                   : x ≠ 0 and every member vanishes
  GaugeDefinite,        // x                   : q(x) = 0 but x ≠ 0
  Monotonicity,         // x / - / m           : q_m(x) not ⪯ q_{m+1}(x)
  MetricNonnegative,    // x, y
  MetricIdentity,       // x, y                : x ≠ y but d(x, y) = 0, or d(x, x) ≠ 0
  MetricSymmetry,       // x, y
  MetricTriangle,       // x, y, z
  MetricTranslation,    // x, y, z             : d(x+z, y+z) ≠ d(x, y)
  TruncationTail,       // x, y / - / N, N'
  Continuity,           // x, y / λ            : sequence image does not converge
  Unbounded,            // y / λ               : y ∉ λU at the search cap
};

struct Witness {
  WitnessKind kind;
  std::vector<HVector> points;
  std::vector<Bihyperbolic> scalars;
  std::vector<int> indices;
};

/// Outcome of a property check. Fail always carries a witness; `found`
/// holds auxiliary results such as the per-probe ε of an absorbing check.
struct CheckReport {
  Verdict verdict = Verdict::SampledPass;
  std::size_t trials = 0;
  std::optional<Witness> witness;
  std::uint64_t seed = 0;
  std::vector<Bihyperbolic> found;

  [[nodiscard]] bool passed() const noexcept { return verdict != Verdict::Fail; }
};

inline CheckReport certified(std::uint64_t seed) { return {Verdict::CertifiedPass, 0, std::nullopt, seed, {}}; }

inline CheckReport failed(std::size_t trials, std::uint64_t seed, Witness w) {
  return {Verdict::Fail, trials, std::move(w), seed, {}};
}

std::string_view verdict_name(Verdict v) noexcept;
std::string_view witness_kind_name(WitnessKind k) noexcept;
std::optional<WitnessKind> witness_kind_from_name(std::string_view name) noexcept;

}  // namespace bihyp
