#include "bihyp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bihyp/error.hpp"

namespace bihyp {

namespace {

/// Tableau in canonical form with respect to `basis`: columns 0..n-1 are the
/// structural variables, n..n+m-1 the phase-one artificials, last the rhs.
class Tableau {
 public:
  Tableau(const std::vector<RealVector>& rows, std::span<const double> b)
      : m_(rows.size()), n_(rows.empty() ? 0 : rows.front().size()), basis_(m_) {
    cells_.assign(m_, RealVector(n_ + m_ + 1, 0.0));
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) cells_[i][j] = sign * rows[i][j];
      cells_[i][n_ + i] = 1.0;
      cells_[i][rhs()] = sign * b[i];
      basis_[i] = n_ + i;
    }
  }

  [[nodiscard]] std::size_t rhs() const noexcept { return n_ + m_; }
  [[nodiscard]] bool is_artificial(std::size_t j) const noexcept { return j >= n_ && j < n_ + m_; }

  /// Runs Bland-rule pivots on the given cost vector (length n + m).
  /// Returns false when the pivot budget is exhausted.
  bool optimize(const RealVector& cost, bool allow_artificial, std::size_t& budget) {
    while (true) {
      std::size_t entering = rhs();
      for (std::size_t j = 0; j < rhs(); ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (std::ranges::find(basis_, j) != basis_.end()) continue;
        if (reduced_cost(cost, j) < -kPivotTol) {
          entering = j;
          break;
        }
      }
      if (entering == rhs()) return true;

      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = cells_[i][entering];
        if (a > kPivotTol) best_ratio = std::min(best_ratio, std::max(0.0, cells_[i][rhs()]) / a);
      }
      std::size_t leaving = m_;
      if (std::isfinite(best_ratio)) {
        const double slack = 1e-12 * std::max(1.0, std::abs(best_ratio));
        for (std::size_t i = 0; i < m_; ++i) {
          const double a = cells_[i][entering];
          if (a <= kPivotTol || std::max(0.0, cells_[i][rhs()]) / a > best_ratio + slack) continue;
          if (leaving == m_ || basis_[i] < basis_[leaving]) leaving = i;
        }
      }
      // Both objectives used here are bounded below, so an unbounded ray is
      // only possible through round-off; treat it like a stall.
      if (leaving == m_) return false;
      if (budget == 0) return false;
      --budget;
      pivot(leaving, entering);
    }
  }

  [[nodiscard]] double objective(const RealVector& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * cells_[i][rhs()];
    return v;
  }

  /// Pivots basic artificials out wherever a structural column can replace them.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs(cells_[i][j]) > kPivotTol) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  [[nodiscard]] RealVector solution() const {
    RealVector x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, cells_[i][rhs()]);
    }
    return x;
  }

  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }

 private:
  [[nodiscard]] double reduced_cost(const RealVector& cost, std::size_t j) const {
    double d = cost[j];
    for (std::size_t i = 0; i < m_; ++i) d -= cost[basis_[i]] * cells_[i][j];
    return d;
  }

  void pivot(std::size_t row, std::size_t col) {
    const double p = cells_[row][col];
    for (double& v : cells_[row]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = cells_[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= rhs(); ++j) cells_[i][j] -= f * cells_[row][j];
      cells_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<RealVector> cells_;
  std::vector<std::size_t> basis_;
};

void require_columns(const LPProblem& p) {
  if (p.columns.empty()) throw Error(ErrorCode::InvalidInput, "LP needs at least one column");
  for (const auto& c : p.columns) {
    if (c.size() != p.target.size()) {
      throw Error(ErrorCode::DimensionMismatch, "LP column length differs from target length");
    }
  }
}

}  // namespace

LPSolution solve_standard_form(const std::vector<RealVector>& rows, std::span<const double> b,
                               std::span<const double> cost, std::size_t pivot_cap) {
  Tableau t(rows, b);
  const std::size_t width = t.n() + t.m();
  std::size_t budget = pivot_cap;

  RealVector phase1(width, 0.0);
  for (std::size_t j = t.n(); j < width; ++j) phase1[j] = 1.0;
  LPSolution out;
  if (!t.optimize(phase1, true, budget)) {
    out.status = LPStatus::Stalled;
    out.pivots = pivot_cap - budget;
    return out;
  }
  if (t.objective(phase1) > kFeasibilityTol) {
    out.status = LPStatus::Infeasible;
    out.objective = t.objective(phase1);
    out.pivots = pivot_cap - budget;
    return out;
  }
  t.expel_artificials();

  RealVector phase2(width, 0.0);
  std::copy(cost.begin(), cost.end(), phase2.begin());
  if (!t.optimize(phase2, false, budget)) {
    out.status = LPStatus::Stalled;
    out.pivots = pivot_cap - budget;
    return out;
  }
  out.status = LPStatus::Optimal;
  out.objective = t.objective(phase2);
  out.weights = t.solution();
  out.pivots = pivot_cap - budget;
  return out;
}

LPSolution solve_min_weight(const LPProblem& problem) {
  require_columns(problem);
  const std::size_t n = problem.target.size();
  const std::size_t cols = problem.columns.size();
  std::vector<RealVector> rows(n, RealVector(cols));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < cols; ++j) rows[r][j] = problem.columns[j][r];
  }
  const RealVector cost(cols, 1.0);
  return solve_standard_form(rows, problem.target, cost, 10 * (n + cols));
}

LPSolution solve_convex_combination(const LPProblem& problem) {
  require_columns(problem);
  const std::size_t n = problem.target.size();
  const std::size_t cols = problem.columns.size();
  std::vector<RealVector> rows(n + 1, RealVector(cols, 1.0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < cols; ++j) rows[r][j] = problem.columns[j][r];
  }
  RealVector b = problem.target;
  b.push_back(1.0);
  const RealVector cost(cols, 0.0);
  return solve_standard_form(rows, b, cost, 10 * (n + 1 + cols));
}

double origin_depth(std::span<const RealVector> columns) {
  if (columns.empty()) return 0.0;
  const std::size_t n = columns.front().size();
  const std::size_t cols = columns.size();
  // Variables: ν (cols) and t, with μⱼ = νⱼ + t.
  std::vector<RealVector> rows(n + 1, RealVector(cols + 1, 0.0));
  for (std::size_t r = 0; r < n; ++r) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      rows[r][j] = columns[j][r];
      sum += columns[j][r];
    }
    rows[r][cols] = sum;
  }
  for (std::size_t j = 0; j < cols; ++j) rows[n][j] = 1.0;
  rows[n][cols] = static_cast<double>(cols);
  RealVector b(n + 1, 0.0);
  b[n] = 1.0;
  RealVector cost(cols + 1, 0.0);
  cost[cols] = -1.0;
  const auto sol = solve_standard_form(rows, b, cost, 10 * (n + 1 + cols + 1));
  if (sol.status == LPStatus::Stalled) {
    throw Error(ErrorCode::NumericalStall, "interior probe exceeded its pivot budget");
  }
  if (sol.status != LPStatus::Optimal) return 0.0;
  return sol.weights[cols];
}

std::size_t column_rank(std::span<const RealVector> columns, double tol) {
  if (columns.empty()) return 0;
  const std::size_t n = columns.front().size();
  std::vector<RealVector> a(columns.begin(), columns.end());  // rows = columns, same rank
  double scale = 0.0;
  for (const auto& r : a) {
    for (double v : r) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) return 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
    std::size_t best = rank;
    for (std::size_t i = rank; i < a.size(); ++i) {
      if (std::abs(a[i][col]) > std::abs(a[best][col])) best = i;
    }
    if (std::abs(a[best][col]) <= tol * scale) continue;
    std::swap(a[rank], a[best]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      const double f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace bihyp
