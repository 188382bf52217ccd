#include "bihyp/gauge.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>

#include "bihyp/error.hpp"
#include "bihyp/seminorm.hpp"

namespace bihyp {

namespace {

constexpr double kZeroGauge = 1e-12;

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double cross(const RealVector& o, const RealVector& a, const RealVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dist2(const RealVector& a, const RealVector& b) {
  return (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]);
}

/// One nullspace vector of an r×c matrix with a one-dimensional kernel, or
/// empty when the kernel has another dimension.
RealVector nullspace_vector(std::vector<RealVector> a, double tol) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows; ++i) {
      if (std::abs(a[i][c]) > std::abs(a[best][c])) best = i;
    }
    if (std::abs(a[best][c]) <= tol) continue;
    std::swap(a[r], a[best]);
    const double p = a[r][c];
    for (double& v : a[r]) v /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0.0) continue;
      const double f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() + 1 != cols) return {};
  std::size_t free = 0;
  for (std::size_t k = 0; k < pivot_col.size() && pivot_col[k] == free; ++k) ++free;
  RealVector x(cols, 0.0);
  x[free] = 1.0;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -a[k][free];
  return x;
}

bool same_halfspace(const HalfSpace& a, const HalfSpace& b) {
  if (std::abs(a.offset - b.offset) > 1e-9) return false;
  for (std::size_t k = 0; k < a.normal.size(); ++k) {
    if (std::abs(a.normal[k] - b.normal[k]) > 1e-9) return false;
  }
  return true;
}

void push_unique(std::vector<HalfSpace>& out, HalfSpace h) {
  const double len = std::sqrt(dot(h.normal, h.normal));
  for (double& v : h.normal) v /= len;
  h.offset /= len;
  if (std::ranges::none_of(out, [&](const HalfSpace& g) { return same_halfspace(g, h); })) out.push_back(std::move(h));
}

std::vector<HalfSpace> facet_enumeration(std::span<const RealVector> vertices) {
  const std::size_t n = vertices.front().size();
  double scale = 1.0;
  for (const auto& v : vertices) {
    for (double c : v) scale = std::max(scale, std::abs(c));
  }
  const double eps = 1e-10 * scale;
  std::vector<HalfSpace> out;
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t m = vertices.size();
  if (m < n) return out;
  while (true) {
    std::vector<RealVector> rows;
    for (std::size_t k : pick) {
      RealVector row(vertices[k]);
      row.push_back(-1.0);
      rows.push_back(std::move(row));
    }
    RealVector ab = nullspace_vector(std::move(rows), 1e-12 * scale);
    if (!ab.empty()) {
      HalfSpace h{RealVector(ab.begin(), ab.end() - 1), ab.back()};
      if (dot(h.normal, h.normal) > 1e-24) {
        bool below = true;
        bool above = true;
        for (const auto& v : vertices) {
          const double s = dot(h.normal, v) - h.offset;
          below = below && s <= eps;
          above = above && s >= -eps;
        }
        if (below) push_unique(out, h);
        if (above) {
          for (double& c : h.normal) c = -c;
          h.offset = -h.offset;
          push_unique(out, std::move(h));
        }
      }
    }
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == m - n + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

bool inside_halfspaces(std::span<const HalfSpace> hs, std::span<const double> x, double alpha) {
  for (const auto& h : hs) {
    if (dot(h.normal, x) > alpha * h.offset + 1e-12 * std::max(1.0, std::abs(alpha * h.offset))) return false;
  }
  return true;
}

bool all_closed(const Product& s) {
  return std::ranges::all_of(s.parts, [](const RealConvexBody& b) {
    const auto* ball = std::get_if<NormBall>(&b);
    return ball == nullptr || ball->closed;
  });
}

bool all_open_balls(const Product& s) {
  return std::ranges::all_of(s.parts, [](const RealConvexBody& b) {
    const auto* ball = std::get_if<NormBall>(&b);
    return ball != nullptr && !ball->closed;
  });
}

bool near_unit(const Bihyperbolic& q, double margin) {
  return std::ranges::any_of(q.lambda(), [margin](double c) { return std::abs(c - 1.0) < margin; });
}

/// Stage of the sandwich chain violated at x, or -1.
int sandwich_violation(const Product& set, const HVector& x, double margin) {
  const Bihyperbolic q = h2_gauge(set, x).value;
  if (near_unit(q, margin)) return -1;
  const bool in_a = strictly_precedes(q, Bihyperbolic::one());
  const bool in_c = precedes(q, Bihyperbolic::one(), kMembershipTol);
  const bool in_s = contains(set, x);
  if (in_a && !in_s) return 0;
  if (in_s && !in_c) return 1;
  if (all_closed(set) && in_s != in_c) return 2;
  if (all_open_balls(set) && in_s != in_a) return 3;
  return -1;
}

bool gauge_vanishes(const Product& set, const HVector& x) {
  const Bihyperbolic q = h2_gauge(set, x).value;
  return std::ranges::all_of(q.lambda(), [](double c) { return c <= kZeroGauge; });
}

}  // namespace

std::string_view gauge_method_name(GaugeMethod m) noexcept {
  switch (m) {
    case GaugeMethod::LP:
      return "LP";
    case GaugeMethod::ClosedForm:
      return "ClosedForm";
    case GaugeMethod::Bisection:
      return "Bisection";
  }
  return "?";
}

bool origin_interior(const RealConvexBody& body, std::size_t dim) {
  const auto* hull = std::get_if<PolytopeHull>(&body);
  if (hull == nullptr) return true;
  if (column_rank(hull->vertices) < dim) return false;
  return origin_depth(hull->vertices) > 1e-10;
}

double real_gauge(const RealConvexBody& body, std::span<const double> x, double tol) {
  (void)tol;
  if (const auto* ball = std::get_if<NormBall>(&body)) return component_norm(ball->p, x) / ball->radius;
  const auto& hull = std::get<PolytopeHull>(body);
  if (hull.vertices.front().size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "point length differs from hull dimension");
  }
  if (!origin_interior(body, x.size())) throw Error(ErrorCode::OriginNotInterior, "origin is not interior to the hull");
  if (std::ranges::all_of(x, [](double v) { return v == 0.0; })) return 0.0;
  const auto sol = solve_min_weight({hull.vertices, RealVector(x.begin(), x.end())});
  switch (sol.status) {
    case LPStatus::Optimal:
      return sol.objective;
    case LPStatus::Infeasible:
      throw Error(ErrorCode::LPInfeasible, "point is outside the cone of the hull");
    case LPStatus::Stalled:
      break;
  }
  throw Error(ErrorCode::NumericalStall, "gauge LP exceeded its pivot budget");
}

GaugeResult h2_gauge(const Product& set, const HVector& x, double tol) {
  if (x.dim() != set.dim) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from set dimension");
  GaugeResult out;
  bool any_hull = false;
  for (std::size_t i = 0; i < 4; ++i) {
    any_hull = any_hull || std::holds_alternative<PolytopeHull>(set.parts[i]);
    try {
      out.per_component[i] = real_gauge(set.parts[i], x.component(i), tol);
    } catch (const Error& e) {
      throw Error(e.code(), "component " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  out.value = Bihyperbolic::from_lambda(out.per_component);
  out.method = any_hull ? GaugeMethod::LP : GaugeMethod::ClosedForm;
  return out;
}

std::vector<RealVector> gift_wrap(std::span<const RealVector> points) {
  std::vector<RealVector> pts;
  for (const auto& p : points) {
    if (p.size() != 2) throw Error(ErrorCode::DimensionMismatch, "gift wrapping needs planar points");
    if (std::ranges::none_of(pts, [&](const RealVector& q) { return dist2(p, q) == 0.0; })) pts.push_back(p);
  }
  if (pts.size() < 3) return pts;
  double scale = 1.0;
  for (const auto& p : pts) scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
  const double eps = 1e-12 * scale * scale;

  const auto start = std::ranges::min_element(pts, [](const RealVector& a, const RealVector& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  std::vector<RealVector> hull;
  std::size_t p = static_cast<std::size_t>(start - pts.begin());
  const std::size_t first = p;
  do {
    hull.push_back(pts[p]);
    std::size_t q = (p + 1) % pts.size();
    for (std::size_t r = 0; r < pts.size(); ++r) {
      if (r == p) continue;
      const double c = cross(pts[p], pts[q], pts[r]);
      if (c < -eps || (std::abs(c) <= eps && dist2(pts[p], pts[r]) > dist2(pts[p], pts[q]))) q = r;
    }
    p = q;
  } while (p != first && hull.size() <= pts.size());
  return hull;
}

std::vector<HalfSpace> hull_halfspaces(std::span<const RealVector> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "hull needs at least one vertex");
  const std::size_t n = vertices.front().size();
  std::vector<HalfSpace> out;
  if (n == 1) {
    const auto [lo, hi] = std::ranges::minmax(vertices, {}, [](const RealVector& v) { return v[0]; });
    out.push_back({{1.0}, hi[0]});
    out.push_back({{-1.0}, -lo[0]});
    return out;
  }
  if (n == 2) {
    const auto poly = gift_wrap(vertices);
    if (poly.size() < 3) return facet_enumeration(vertices);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const auto& a = poly[k];
      const auto& b = poly[(k + 1) % poly.size()];
      RealVector normal{b[1] - a[1], a[0] - b[0]};
      push_unique(out, {normal, normal[0] * a[0] + normal[1] * a[1]});
    }
    return out;
  }
  return facet_enumeration(vertices);
}

double gauge_bisection(const RealConvexBody& body, std::span<const double> x, double tol) {
  std::function<bool(double)> member;
  std::vector<HalfSpace> hs;
  if (const auto* ball = std::get_if<NormBall>(&body)) {
    const double n = component_norm(ball->p, x);
    member = [n, r = ball->radius](double alpha) { return n <= alpha * r; };
  } else {
    const auto& hull = std::get<PolytopeHull>(body);
    hs = hull_halfspaces(hull.vertices);
    const bool interior = hs.size() > x.size() && std::ranges::all_of(hs, [](const HalfSpace& h) { return h.offset > 1e-10; });
    if (!interior) throw Error(ErrorCode::OriginNotInterior, "origin is not interior to the hull");
    member = [&hs, x](double alpha) { return inside_halfspaces(hs, x, alpha); };
  }
  if (std::ranges::all_of(x, [](double v) { return v == 0.0; })) return 0.0;
  double hi = 1.0;
  while (!member(hi)) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw Error(ErrorCode::NumericalStall, "bisection bracket diverged");
  }
  double lo = 0.0;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (member(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

H2Set unit_sets(const Product& set, bool strict) {
  return unit_ball(Seminorm{GaugeSeminorm{set}}, set.dim, strict);
}

CheckReport check_sandwich(const Product& set, std::size_t trials, std::uint64_t seed, double margin) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  const H2Set s = set;
  const auto points = structured_points(s, false);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, t);
    HVector x;
    if (t < points.size()) {
      x = points[t];
    } else if (t % 3 == 0) {
      x = sample_box(s, rng, 1.5);
    } else if (t % 3 == 1) {
      x = sample_member(s, rng);
    } else {
      x = rng.uniform(0.9, 1.1) * sample_boundary(set, rng);
    }
    if (const int stage = sandwich_violation(set, x, margin); stage >= 0) {
      return failed(t + 1, seed, {WitnessKind::SandwichInclusion, {x}, {}, {stage}});
    }
  }
  return {Verdict::SampledPass, trials, std::nullopt, seed, {}};
}

CheckReport check_gauge_definite(const Product& set, std::size_t trials, std::uint64_t seed, double tol) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be positive");
  const H2Set s = set;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, t);
    HVector x(set.dim);
    if (t > 0) x = std::ldexp(1.0, -static_cast<int>(rng.index(48))) * sample_box(s, rng);
    if (gauge_vanishes(set, x) && x.max_abs() > tol) {
      return failed(t + 1, seed, {WitnessKind::GaugeDefinite, {x}, {}, {}});
    }
  }
  return {Verdict::SampledPass, trials, std::nullopt, seed, {}};
}

bool reverify_gauge(const Product& set, const Witness& w, double margin) {
  if (w.points.size() != 1) return false;
  switch (w.kind) {
    case WitnessKind::SandwichInclusion:
      return w.indices.size() == 1 && sandwich_violation(set, w.points[0], margin) == w.indices[0];
    case WitnessKind::GaugeDefinite:
      return gauge_vanishes(set, w.points[0]) && w.points[0].max_abs() > 1e-7;
    default:
      return false;
  }
}

}  // namespace bihyp
