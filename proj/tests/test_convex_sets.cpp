#include <doctest.h>

#include <cmath>

#include "bihyp/error.hpp"
#include "bihyp/sets.hpp"
#include "support.hpp"

using namespace bihyp;
using testing::lam;
using testing::vec;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

// Barycentric test for a 2-D triangle.
bool in_triangle(const std::vector<RealVector>& t, double px, double py) {
  const double d = (t[1][1] - t[2][1]) * (t[0][0] - t[2][0]) + (t[2][0] - t[1][0]) * (t[0][1] - t[2][1]);
  const double a = ((t[1][1] - t[2][1]) * (px - t[2][0]) + (t[2][0] - t[1][0]) * (py - t[2][1])) / d;
  const double b = ((t[2][1] - t[0][1]) * (px - t[2][0]) + (t[0][0] - t[2][0]) * (py - t[2][1])) / d;
  return a >= -1e-9 && b >= -1e-9 && 1 - a - b >= -1e-9;
}

H2Set unit_balls(std::size_t dim, ComponentNorm p = ComponentNorm::P2, bool closed = true) {
  return Product::balls(dim, p, 1.0, closed);
}

H2Set off_origin_product() {
  return make_product({make_hull({{1, 0}, {2, 0}, {1, 1}}), make_ball(ComponentNorm::P2, 1, true),
                       make_ball(ComponentNorm::P2, 1, true), make_ball(ComponentNorm::P2, 1, true)},
                      2);
}

H2Set mixed_product() {
  return make_product({make_hull({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), make_ball(ComponentNorm::P1, 1.5, true),
                       make_hull({{2, 0}, {1, 1.5}, {-1, 1.5}, {-2, 0}, {-1, -1.5}, {1, -1.5}}),
                       make_ball(ComponentNorm::PInf, 0.5, true)},
                      2);
}

}  // namespace

TEST_CASE("ball and hull membership") {
  const auto closed = make_ball(ComponentNorm::P2, 1.0, true);
  const auto open = make_ball(ComponentNorm::P2, 1.0, false);
  const RealVector on{0.6, 0.8};
  CHECK(body_contains(closed, on));
  CHECK_FALSE(body_contains(open, on));
  CHECK(body_contains(open, RealVector{0.6, 0.7999}));
  CHECK(body_contains(make_ball(ComponentNorm::PInf, 1.0, true), RealVector{1.0, -1.0}));
  CHECK_FALSE(body_contains(make_ball(ComponentNorm::P1, 1.0, true), RealVector{0.6, 0.6}));

  const std::vector<RealVector> tri{{0, 0}, {3, 0}, {0, 2}};
  const auto hull = make_hull(tri);
  for (int t = 0; t < 2000; ++t) {
    const double px = testing::uniform(-1, 4);
    const double py = testing::uniform(-1, 3);
    REQUIRE(body_contains(hull, RealVector{px, py}) == in_triangle(tri, px, py));
  }
  CHECK(body_contains(make_hull({{1, 2}}), RealVector{1, 2}));
  CHECK_FALSE(body_contains(make_hull({{1, 2}}), RealVector{1, 2.001}));
}

TEST_CASE("body validation") {
  CHECK(error_of([] { (void)make_hull({}); }) == ErrorCode::InvalidInput);
  CHECK(error_of([] { (void)make_ball(ComponentNorm::P2, 0.0, true); }) == ErrorCode::InvalidInput);
  CHECK(error_of([] { (void)make_product({make_hull({{1, 2, 3}}), make_ball(ComponentNorm::P2, 1, true),
                                          make_ball(ComponentNorm::P2, 1, true), make_ball(ComponentNorm::P2, 1, true)},
                                         2); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("product membership is componentwise") {
  const H2Set s = mixed_product();
  for (int t = 0; t < 2000; ++t) {
    const auto x = testing::random_vector(2, 2.0);
    const auto c = [&](std::size_t i) { return x.component(i); };
    const bool expect = std::max(std::abs(c(0)[0]), std::abs(c(0)[1])) <= 1 &&
                        std::abs(c(1)[0]) + std::abs(c(1)[1]) <= 1.5 && body_contains(s.product().parts[2], c(2)) &&
                        std::max(std::abs(c(3)[0]), std::abs(c(3)[1])) <= 0.5;
    REQUIRE(contains(s, x) == expect);
  }
  CHECK(contains(Product::balls(1, ComponentNorm::PInf, 1.0, true), HVector(1)));
  CHECK(error_of([&] { (void)contains(s, HVector(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("the three-quarters counterexample") {
  const H2Set b = abs_sum_lt(1, 2.0);
  CHECK_FALSE(contains(b, HVector::scalar(Bihyperbolic(0.75))));
  for (int i = 1; i <= 4; ++i) CHECK(contains(b, HVector::scalar(Bihyperbolic::idempotent(i) * 0.75)));
}

TEST_CASE("scale") {
  const H2Set s = unit_balls(2);
  const H2Set two = scale(Bihyperbolic(2.0), s);
  CHECK(contains(two, vec({{{1.5, 0}, {0, 1.9}, {1, 1}, {0, 0}}})));
  CHECK_FALSE(contains(two, vec({{{2.1, 0}, {0, 0}, {0, 0}, {0, 0}}})));
  const H2Set one = scale(Bihyperbolic::one(), s);
  for (int t = 0; t < 200; ++t) {
    const auto x = testing::random_vector(2, 1.2);
    CHECK(contains(one, x) == contains(s, x));
  }
  const H2Set e1 = scale(Bihyperbolic::idempotent(1), s);
  CHECK(contains(e1, vec({{{0.5, 0.5}, {0, 0}, {0, 0}, {0, 0}}})));
  CHECK_FALSE(contains(e1, vec({{{0.5, 0.5}, {0, 1e-3}, {0, 0}, {0, 0}}})));
  const H2Set neg = scale(lam(-2, 1, 1, 1), mixed_product());
  CHECK(contains(neg, vec({{{-1.9, 1.9}, {0, 0}, {0, 0}, {0, 0}}})));
  CHECK(error_of([] { (void)scale(Bihyperbolic(2.0), abs_sum_lt(1, 2.0)); }) == ErrorCode::UnsupportedSet);
}

TEST_CASE("convexity") {
  CHECK(check_h2_convex(unit_balls(2), 100, 0).verdict == Verdict::CertifiedPass);
  CHECK(check_h2_convex(mixed_product(), 100, 0).verdict == Verdict::CertifiedPass);
  const H2Set b = abs_sum_lt(1, 2.0);
  const auto r = check_h2_convex(b, 1000, 0);
  REQUIRE(r.verdict == Verdict::Fail);
  REQUIRE(r.witness);
  CHECK(reverify(b, *r.witness));
  const auto& w = *r.witness;
  CHECK(w.kind == WitnessKind::ConvexCombination);
  CHECK(w.points[0] == HVector::scalar(Bihyperbolic::idempotent(1) * 1.5));
  CHECK(w.points[1] == HVector::scalar(Bihyperbolic::idempotent(2) * 1.5));
  CHECK(w.scalars[0] == Bihyperbolic::idempotent(1));
}

TEST_CASE("balancedness") {
  CHECK(check_balanced(unit_balls(2), 100, 0).verdict == Verdict::CertifiedPass);
  const H2Set off = off_origin_product();
  const auto r = check_balanced(off, 100, 0);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(reverify(off, *r.witness));
  CHECK(r.witness->kind == WitnessKind::BalancedScaling);
  CHECK(r.witness->scalars[0] == Bihyperbolic::zero());
  CHECK(check_balanced(abs_sum_lt(1, 2.0), 1000, 0).verdict == Verdict::SampledPass);
  CHECK(check_balanced(abs_sum_lt(2, 2.0), 1000, 3).verdict == Verdict::SampledPass);
}

TEST_CASE("absorbing") {
  std::vector<HVector> probes;
  for (int t = 0; t < 16; ++t) probes.push_back(testing::random_vector(2, 10.0));
  const auto r = check_absorbing(unit_balls(2), probes, 1000, 0);
  CHECK(r.verdict == Verdict::SampledPass);
  REQUIRE(r.found.size() == probes.size());
  for (std::size_t q = 0; q < probes.size(); ++q) {
    // ε·x must land in the ball for a found ε
    CHECK(contains(unit_balls(2), r.found[q] * probes[q]));
  }
  const H2Set off = off_origin_product();
  const auto bad = check_absorbing(off, probes, 1000, 0);
  REQUIRE(bad.verdict == Verdict::Fail);
  CHECK(reverify(off, *bad.witness));

  std::vector<HVector> scalar_probes;
  for (int t = 0; t < 16; ++t) scalar_probes.push_back(testing::random_vector(1, 5.0));
  CHECK(check_absorbing(modulus_lt_or_one(1, 0.5), scalar_probes, 1000, 0).verdict == Verdict::SampledPass);
  CHECK(error_of([&] { (void)check_absorbing(off, {}, 10, 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("union set is not stable under idempotents") {
  const H2Set b = modulus_lt_or_one(1, 0.5);
  CHECK(contains(b, HVector::scalar(Bihyperbolic::one())));
  CHECK(contains(b, HVector::scalar(Bihyperbolic(0.4))));
  for (int i = 1; i <= 4; ++i) CHECK_FALSE(contains(b, HVector::scalar(Bihyperbolic::idempotent(i))));
  const auto r = check_projection_stable(b, 1000, 0);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(reverify(b, *r.witness));
  CHECK(r.witness->points[0] == HVector::scalar(Bihyperbolic::one()));
  const int i = r.witness->indices.at(0);
  CHECK(r.witness->points[1] == HVector::scalar(Bihyperbolic::idempotent(i)));
}

TEST_CASE("decomposition") {
  CHECK(check_decomposition(unit_balls(2), 1000, 0).verdict == Verdict::CertifiedPass);
  const H2Set b = abs_sum_lt(1, 2.0);
  const auto r = check_decomposition(b, 1000, 0);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(r.witness->points[0] == HVector::scalar(Bihyperbolic(0.75)));
  CHECK(reverify(b, *r.witness));
  for (int i = 1; i <= 4; ++i) CHECK(in_slice(b, i, HVector::scalar(Bihyperbolic(0.75))));
}

TEST_CASE("minkowski sums of idempotent parts") {
  const std::vector<int> pair{1, 2};
  const std::vector<int> triple{1, 2, 3};
  CHECK(minkowski_sum_subset_check(unit_balls(2), pair, 1000, 0).passed());
  CHECK(minkowski_sum_subset_check(unit_balls(2), triple, 1000, 0).passed());
  CHECK(minkowski_sum_subset_check(mixed_product(), std::vector<int>{2, 4}, 500, 1).passed());
  CHECK(error_of([&] { (void)minkowski_sum_subset_check(off_origin_product(), pair, 10, 0); }) ==
        ErrorCode::PreconditionFailed);
  CHECK(error_of([&] { (void)minkowski_sum_subset_check(unit_balls(2), std::vector<int>{1, 1}, 10, 0); }) ==
        ErrorCode::BadIndex);
  CHECK(error_of([&] { (void)minkowski_sum_subset_check(unit_balls(2), std::vector<int>{1, 5}, 10, 0); }) ==
        ErrorCode::BadIndex);
}

TEST_CASE("scaling of balanced sets") {
  std::vector<Bihyperbolic> signs;
  for (unsigned m = 0; m < 16; ++m) {
    signs.push_back(lam(m & 1U ? -1 : 1, m & 2U ? -1 : 1, m & 4U ? -1 : 1, m & 8U ? -1 : 1));
  }
  CHECK(check_scaling(mixed_product(), signs, 1000, 0).passed());
  const std::vector<Bihyperbolic> invertible{lam(0.5, -2, 1.5, -0.25), Bihyperbolic::j1(), lam(-3, 0.2, 1, -1)};
  CHECK(check_scaling(unit_balls(2), invertible, 1000, 0).passed());
  // λS = |λ|S fails for a set that is not balanced
  const std::vector<Bihyperbolic> minus{Bihyperbolic(-1.0)};
  const H2Set off = off_origin_product();
  const auto r = check_scaling(off, minus, 1000, 0);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(reverify(off, *r.witness));
}

TEST_CASE("projections and slices of balanced sets") {
  CHECK(check_projection_stable(unit_balls(3), 1000, 0).passed());
  CHECK(check_slices_balanced(mixed_product(), 1000, 0).passed());
  CHECK(check_slices_balanced(abs_sum_lt(1, 2.0), 1000, 0).passed());
}

TEST_CASE("checks are deterministic") {
  const H2Set b = abs_sum_lt(2, 2.0);
  const auto a = check_balanced(b, 300, 9);
  const auto c = check_balanced(b, 300, 9);
  CHECK(a.verdict == c.verdict);
  CHECK(a.trials == c.trials);
  Rng r1 = Rng::stream(5, 7);
  Rng r2 = Rng::stream(5, 7);
  CHECK(sample_member(b, r1) == sample_member(b, r2));
}

TEST_CASE("samplers stay inside") {
  const H2Set s = mixed_product();
  for (std::size_t t = 0; t < 300; ++t) {
    Rng rng = Rng::stream(1, t);
    CHECK(contains(s, sample_member(s, rng)));
    const auto bd = sample_boundary(s.product(), rng);
    CHECK(contains(s, bd));
    CHECK_FALSE(contains(s, 1.01 * bd));
  }
  const H2Set open = unit_balls(2, ComponentNorm::P2, false);
  for (std::size_t t = 0; t < 100; ++t) {
    Rng rng = Rng::stream(2, t);
    CHECK(contains(open, sample_boundary(open.product(), rng)));
  }
}

TEST_CASE("degenerate scalar lists") {
  const auto interval = degenerate_unit_interval();
  CHECK(interval.at(0) == Bihyperbolic::zero());
  CHECK(interval.at(1) == Bihyperbolic::one());
  for (const auto& l : interval) {
    CHECK(is_nonnegative(l));
    CHECK(precedes(l, Bihyperbolic::one()));
  }
  for (const auto& l : degenerate_unit_ball()) CHECK(precedes(modulus(l), Bihyperbolic::one()));
}
