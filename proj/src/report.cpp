#include "bihyp/report.hpp"

#include <array>
#include <utility>

namespace bihyp {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::CertifiedPass: return "CertifiedPass";
    case Verdict::SampledPass: return "SampledPass";
    case Verdict::Fail: return "Fail";
  }
  return "Fail";
}

namespace {

constexpr std::array<std::pair<WitnessKind, std::string_view>, 26> kKindNames{{
    {WitnessKind::ConvexCombination, "ConvexCombination"},
    {WitnessKind::BalancedScaling, "BalancedScaling"},
    {WitnessKind::NotAbsorbed, "NotAbsorbed"},
    {WitnessKind::Decomposition, "Decomposition"},
    {WitnessKind::MinkowskiSum, "MinkowskiSum"},
    {WitnessKind::ProjectionStability, "ProjectionStability"},
    {WitnessKind::SliceBalance, "SliceBalance"},
    {WitnessKind::ScalingEquality, "ScalingEquality"},
    {WitnessKind::SandwichInclusion, "SandwichInclusion"},
    {WitnessKind::SeminormNegative, "SeminormNegative"},
    {WitnessKind::SeminormAtZero, "SeminormAtZero"},
    {WitnessKind::Homogeneity, "Homogeneity"},
    {WitnessKind::Subadditivity, "Subadditivity"},
    {WitnessKind::ReverseTriangle, "ReverseTriangle"},
    {WitnessKind::KernelClosure, "KernelClosure"},
    {WitnessKind::Separation, "Separation"},
    {WitnessKind::GaugeDefinite, "GaugeDefinite"},
    {WitnessKind::Monotonicity, "Monotonicity"},
    {WitnessKind::MetricNonnegative, "MetricNonnegative"},
    {WitnessKind::MetricIdentity, "MetricIdentity"},
    {WitnessKind::MetricSymmetry, "MetricSymmetry"},
    {WitnessKind::MetricTriangle, "MetricTriangle"},
    {WitnessKind::MetricTranslation, "MetricTranslation"},
    {WitnessKind::TruncationTail, "TruncationTail"},
    {WitnessKind::Continuity, "Continuity"},
    {WitnessKind::Unbounded, "Unbounded"},
}};

}  // namespace

std::string_view witness_kind_name(WitnessKind k) noexcept {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "Unknown";
}

std::optional<WitnessKind> witness_kind_from_name(std::string_view name) noexcept {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

}  // namespace bihyp
