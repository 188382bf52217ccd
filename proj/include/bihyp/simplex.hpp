#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bihyp {

using RealVector = std::vector<double>;

/// x ∈ α·hull(columns) encoded as: minimize Σμⱼ s.t. Σμⱼ·columnⱼ = target, μ ≥ 0.
struct LPProblem {
  std::vector<RealVector> columns;
  RealVector target;
};

enum class LPStatus { Optimal, Infeasible, Stalled };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  double objective = 0.0;
  RealVector weights;
  std::size_t pivots = 0;
};

inline constexpr double kPivotTol = 1e-11;
inline constexpr double kFeasibilityTol = 1e-9;

/// Dense two-phase tableau simplex for min cᵀx s.t. Ax = b, x ≥ 0, using
/// Bland's rule. `rows` holds A row-major. The pivot budget covers both phases.
LPSolution solve_standard_form(const std::vector<RealVector>& rows, std::span<const double> b,
                               std::span<const double> cost, std::size_t pivot_cap);

/// min Σμ subject to Σμⱼ·columnⱼ = target, μ ≥ 0. Cap 10·(dim + columns).
LPSolution solve_min_weight(const LPProblem& problem);

/// Feasibility of target ∈ hull(columns): μ ≥ 0, Σμ = 1, Σμⱼ·columnⱼ = target.
LPSolution solve_convex_combination(const LPProblem& problem);

/// Largest t such that the origin is a combination of all columns with every
/// weight >= t (weights summing to one). Zero when the origin is on the
/// relative boundary or outside the hull.
double origin_depth(std::span<const RealVector> columns);

/// Numerical rank of the matrix whose columns are given.
std::size_t column_rank(std::span<const RealVector> columns, double tol = 1e-10);

}  // namespace bihyp
