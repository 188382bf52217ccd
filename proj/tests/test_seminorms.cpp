#include <doctest.h>

#include <cmath>

#include "bihyp/error.hpp"
#include "bihyp/gauge.hpp"
#include "bihyp/seminorm.hpp"
#include "support.hpp"

using namespace bihyp;
using testing::lam;
using testing::near;
using testing::vec;

namespace {

Seminorm canonical() { return Seminorm{CanonicalNorm{}}; }
Seminorm coord(std::initializer_list<int> kept) { return Seminorm{CoordinateSeminorm::keep(kept)}; }

Product square_product() {
  const auto sq = make_hull({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  return make_product({sq, make_ball(ComponentNorm::P1, 1.5, true), sq, make_ball(ComponentNorm::PInf, 0.5, true)}, 2);
}

std::vector<HVector> probes(std::size_t dim) {
  std::vector<HVector> out;
  for (std::size_t t = 0; out.size() < 16; ++t) {
    Rng rng = Rng::stream(0, t);
    auto x = sample_vector(dim, t, rng);
    if (!x.is_zero()) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("evaluation examples") {
  const auto e2 = HVector::scalar(Bihyperbolic::idempotent(2));
  CHECK(eval(coord({1}), e2) == Bihyperbolic::zero());
  CHECK_FALSE(e2.is_zero());
  CHECK(eval(canonical(), HVector::scalar(Bihyperbolic::one())) == Bihyperbolic::one());
  const auto x = testing::random_vector(2);
  CHECK(eval(Seminorm{GaugeSeminorm{square_product()}}, x) == h2_gauge(square_product(), x).value);
  const auto v = vec({{{3, 4}, {1, 0}, {0, 2}, {0, 0}}});
  CHECK(eval(coord({1, 3}), v) == lam(5, 0, 2, 0));
}

TEST_CASE("sup family") {
  const std::vector<Seminorm> members{coord({1}), coord({2})};
  const auto q1 = sup_family(members, 1);
  const auto q2 = sup_family(members, 2);
  const auto x = HVector::scalar(Bihyperbolic::idempotent(1) + 2.0 * Bihyperbolic::idempotent(2));
  CHECK(eval(q2, x) == lam(1, 2, 0, 0));
  for (int t = 0; t < 100; ++t) {
    const auto y = testing::random_vector(1);
    CHECK(eval(q1, y) == eval(members[0], y));
    CHECK(precedes(eval(q1, y), eval(q2, y)));
  }
  CHECK_THROWS_AS(sup_family(members, 0), Error);
  CHECK_THROWS_AS(sup_family(members, 3), Error);
  const SeminormFamily f{{coord({1}), coord({2, 3, 4}), canonical()}};
  CHECK(check_sup_monotone(f, 2, 500, 0, 1e-9).passed());
  CHECK(check_seminorm_axioms(sup_family(f.members, 3), 2, 500, 0, 1e-9).passed());
}

TEST_CASE("axioms hold for the constructors") {
  CHECK(check_seminorm_axioms(canonical(), 2, 1000, 0, 1e-9).passed());
  CHECK(check_seminorm_axioms(coord({1}), 1, 1000, 0, 1e-9).passed());
  CHECK(check_seminorm_axioms(Seminorm{CoordinateSeminorm::keep({2, 4}, ComponentNorm::PInf)}, 3, 1000, 0, 1e-9)
            .passed());
  CHECK(check_seminorm_axioms(Seminorm{GaugeSeminorm{square_product()}}, 2, 1000, 0, 1e-9).passed());
}

TEST_CASE("the identity map is not a seminorm") {
  const SeminormFn id = [](const HVector& x) { return x.entry(0); };
  const auto r = check_seminorm_axioms(id, 1, 1000, 0, 1e-9);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(r.witness->kind == WitnessKind::SeminormNegative);
  CHECK(r.witness->points[0] == HVector::scalar(Bihyperbolic(-1.0)));
  CHECK(reverify(id, *r.witness, 1e-9));
}

TEST_CASE("the checker catches broken maps") {
  const SeminormFn squared = [](const HVector& x) {
    const auto n = canonical_norm_eval(CanonicalNorm{}, x);
    return n * n;
  };
  const auto sq = check_seminorm_axioms(squared, 2, 1000, 0, 1e-9);
  REQUIRE(sq.verdict == Verdict::Fail);
  CHECK((sq.witness->kind == WitnessKind::Homogeneity || sq.witness->kind == WitnessKind::Subadditivity));
  CHECK(reverify(squared, *sq.witness, 1e-9));

  const SeminormFn shifted = [](const HVector& x) {
    return canonical_norm_eval(CanonicalNorm{}, x) + Bihyperbolic(0.5);
  };
  const auto sh = check_seminorm_axioms(shifted, 1, 100, 0, 1e-9);
  REQUIRE(sh.verdict == Verdict::Fail);
  CHECK(sh.witness->kind == WitnessKind::SeminormAtZero);

  // homogeneous of degree one for real scalars only: ignores the null cone
  const SeminormFn real_only = [](const HVector& x) { return Bihyperbolic(x.max_abs()); };
  const auto ro = check_seminorm_axioms(real_only, 1, 1000, 0, 1e-9);
  REQUIRE(ro.verdict == Verdict::Fail);
  CHECK(reverify(real_only, *ro.witness, 1e-9));
}

TEST_CASE("kernel is a submodule") {
  CHECK(kernel_check(coord({1}), 2, 500, 0, 1e-9).passed());
  CHECK(kernel_check(canonical(), 2, 100, 0, 1e-9).passed());
  const auto p = coord({1});
  const auto k = vec({{{0}, {1.5}, {-2}, {0.25}}});
  CHECK(eval(p, k) == Bihyperbolic::zero());
  CHECK(eval(p, Bihyperbolic::j1() * k) == Bihyperbolic::zero());
  CHECK(eval(p, k + k) == Bihyperbolic::zero());
}

TEST_CASE("separation") {
  const auto pr = probes(1);
  CHECK(is_separated(SeminormFamily{{canonical()}}, pr, 200, 0, 1e-12).passed());
  CHECK(is_separated(SeminormFamily{{coord({1}), coord({2, 3, 4})}}, pr, 200, 0, 1e-12).passed());
  const SeminormFamily bad{{coord({1})}};
  const auto r = is_separated(bad, pr, 200, 0, 1e-12);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK(r.witness->points[0] == HVector::scalar(Bihyperbolic::idempotent(2)));
  CHECK(reverify(bad, *r.witness, 1e-12));
  CHECK_THROWS_AS(is_separated(bad, std::vector<HVector>{}, 10, 0, 1e-12), Error);
  CHECK_THROWS_AS(is_separated(bad, std::vector<HVector>{HVector(1)}, 10, 0, 1e-12), Error);
}

TEST_CASE("unit balls of seminorms") {
  for (const auto& p : {canonical(), coord({1}), Seminorm{GaugeSeminorm{square_product()}}}) {
    const std::size_t dim = p.fixed_dim().value_or(2);
    const auto pr = probes(dim);
    for (bool strict : {true, false}) {
      const H2Set u = unit_ball(p, dim, strict);
      CHECK(check_h2_convex(u, 1000, 0).passed());
      CHECK(check_balanced(u, 1000, 0).passed());
      CHECK(check_absorbing(u, pr, 1000, 0).passed());
    }
  }
  const H2Set open = unit_ball(canonical(), 1, true);
  const H2Set closed = unit_ball(canonical(), 1, false);
  CHECK_FALSE(contains(open, HVector::scalar(Bihyperbolic::one())));
  CHECK(contains(closed, HVector::scalar(Bihyperbolic::one())));
  CHECK_FALSE(contains(open, HVector::scalar(Bihyperbolic::idempotent(1))));
}

TEST_CASE("helpers") {
  Rng a = Rng::stream(3, 40);
  Rng b = Rng::stream(3, 40);
  CHECK(sample_vector(3, 40, a) == sample_vector(3, 40, b));
  const auto d = degenerate_scalars();
  CHECK(std::ranges::find(d, Bihyperbolic::idempotent(3)) != d.end());
  CHECK(std::ranges::find(d, Bihyperbolic::j2()) != d.end());
  CHECK(precedes_rel(Bihyperbolic(1.0 + 1e-12), Bihyperbolic(1.0), 1e-9));
  CHECK_FALSE(precedes_rel(Bihyperbolic(1.1), Bihyperbolic(1.0), 1e-9));
  CHECK(approx_equal(Bihyperbolic(1e6), Bihyperbolic(1e6 + 1e-4), 1e-9));
  const auto x = testing::random_vector(2);
  CHECK(eval(canonical(), x) == eval(canonical(), x));
}
