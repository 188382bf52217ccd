#include <doctest.h>

#include <array>
#include <limits>
#include <vector>

#include "bihyp/bihyperbolic.hpp"
#include "bihyp/error.hpp"
#include "support.hpp"

using namespace bihyp;
using testing::lam;
using testing::near;

namespace {

// Basis 1, j1, j2, j3 indexed 0..3 as bit masks: jₐ·j_b = j_{a xor b}.
std::array<double, 4> jtable_mul(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  std::array<double, 4> out{};
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned k = 0; k < 4; ++k) out[i ^ k] += a[i] * b[k];
  }
  return out;
}

std::array<double, 4> coords(const CanonicalCoords& c) { return {c.x, c.y, c.z, c.w}; }

CanonicalCoords canon(double x, double y, double z, double w) { return {x, y, z, w}; }

bool is_error(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("canonical to idempotent examples") {
  CHECK(Bihyperbolic::from_canonical(canon(1, 0, 0, 0)) == lam(1, 1, 1, 1));
  CHECK(Bihyperbolic::from_canonical(canon(0, 1, 0, 0)) == lam(1, -1, 1, -1));
  CHECK(Bihyperbolic::from_canonical(canon(0.25, 0.25, 0.25, 0.25)) == lam(1, 0, 0, 0));
  CHECK(lam(1, 1, 1, 1).to_canonical() == canon(1, 0, 0, 0));
  CHECK(lam(1, 0, 0, 0).to_canonical() == canon(0.25, 0.25, 0.25, 0.25));
  CHECK(lam(1, -1, 1, -1).to_canonical() == canon(0, 1, 0, 0));
}

TEST_CASE("non-finite input is rejected") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(is_error(ErrorCode::InvalidInput, [&] { (void)Bihyperbolic::from_canonical(canon(inf, 0, 0, 0)); }));
  CHECK(is_error(ErrorCode::InvalidInput, [&] { (void)lam(0, std::nan(""), 0, 0); }));
}

TEST_CASE("multiplication examples") {
  CHECK(Bihyperbolic::j1() * Bihyperbolic::j2() == Bihyperbolic::j3());
  CHECK(Bihyperbolic::j2() * Bihyperbolic::j1() == Bihyperbolic::j3());
  CHECK(Bihyperbolic::j3() == lam(1, -1, -1, 1));
  CHECK(Bihyperbolic::idempotent(1) * Bihyperbolic::idempotent(2) == Bihyperbolic::zero());
  CHECK(lam(2, 3, 4, 5) * Bihyperbolic::one() == lam(2, 3, 4, 5));
  for (auto j : {Bihyperbolic::j1(), Bihyperbolic::j2(), Bihyperbolic::j3()}) CHECK(j * j == Bihyperbolic::one());
}

TEST_CASE("idempotents are orthogonal and sum to one") {
  Bihyperbolic sum;
  for (int i = 1; i <= 4; ++i) {
    const auto ei = Bihyperbolic::idempotent(i);
    sum += ei;
    for (int j = 1; j <= 4; ++j) {
      CHECK(ei * Bihyperbolic::idempotent(j) == (i == j ? ei : Bihyperbolic::zero()));
    }
  }
  CHECK(sum == Bihyperbolic::one());
  CHECK(is_error(ErrorCode::BadIndex, [] { (void)Bihyperbolic::idempotent(0); }));
  CHECK(is_error(ErrorCode::BadIndex, [] { (void)Bihyperbolic::idempotent(5); }));
}

TEST_CASE("lambda multiplication agrees with the j-table") {
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const std::array<double, 4> a{testing::uniform(-10, 10), testing::uniform(-10, 10), testing::uniform(-10, 10),
                                  testing::uniform(-10, 10)};
    const std::array<double, 4> b{testing::uniform(-10, 10), testing::uniform(-10, 10), testing::uniform(-10, 10),
                                  testing::uniform(-10, 10)};
    const auto expect = jtable_mul(a, b);
    const auto got = coords((Bihyperbolic::from_canonical(canon(a[0], a[1], a[2], a[3])) *
                             Bihyperbolic::from_canonical(canon(b[0], b[1], b[2], b[3])))
                                .to_canonical());
    double scale = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t k = 0; k < 4; ++k) scale += std::abs(a[i] * b[k]);
    }
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(got[k] - expect[k]) / scale);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("round trip through canonical coordinates") {
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const auto c = canon(testing::uniform(-1e6, 1e6), testing::uniform(-1e6, 1e6), testing::uniform(-1e6, 1e6),
                         testing::uniform(-1e6, 1e6));
    const auto r = Bihyperbolic::from_canonical(c).to_canonical();
    const double mag = std::max({std::abs(c.x), std::abs(c.y), std::abs(c.z), std::abs(c.w)});
    worst = std::max({worst, std::abs(r.x - c.x) / mag, std::abs(r.y - c.y) / mag, std::abs(r.z - c.z) / mag,
                      std::abs(r.w - c.w) / mag});
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("ring axioms on random triples") {
  for (int t = 0; t < 10000; ++t) {
    const auto a = testing::random_number();
    const auto b = testing::random_number();
    const auto c = testing::random_number();
    REQUIRE(near((a * b) * c, a * (b * c), 1e-12));
    REQUIRE(a * b == b * a);
    REQUIRE(near(a * (b + c), a * b + a * c, 1e-12));
    REQUIRE(a + (-a) == Bihyperbolic::zero());
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Bihyperbolic(2.0)) == Bihyperbolic(0.5));
  CHECK(inverse(Bihyperbolic::j1()) == Bihyperbolic::j1());
  CHECK(is_error(ErrorCode::NotInvertible, [] { (void)inverse(Bihyperbolic::idempotent(1)); }));
  CHECK(is_error(ErrorCode::NotInvertible, [] { (void)inverse(lam(1, 1, 1e-13, 1)); }));
  CHECK_NOTHROW((void)inverse(lam(1, 1, 1e-13, 1), 1e-14));
  for (int t = 0; t < 1000; ++t) {
    const auto a = testing::random_number(-4, 4);
    if (std::ranges::any_of(a.lambda(), [](double l) { return std::abs(l) < 0.1; })) continue;
    CHECK(near(a * inverse(a), Bihyperbolic::one(), 1e-12));
  }
}

TEST_CASE("null cone and zero divisors") {
  CHECK(is_in_null_cone(Bihyperbolic::idempotent(1)));
  CHECK(is_zero_divisor(Bihyperbolic::idempotent(1)));
  CHECK(is_in_null_cone(Bihyperbolic::zero()));
  CHECK_FALSE(is_zero_divisor(Bihyperbolic::zero()));
  CHECK_FALSE(is_in_null_cone(lam(1, 2, 3, 4)));
  CHECK_FALSE(is_zero_divisor(lam(1, 2, 3, 4)));
}

TEST_CASE("null cone matches the canonical linear conditions") {
  // λ₁..λ₄ vanish exactly on x+y+z+w = 0, x−y+z−w = 0, x+y−z−w = 0, x−y−z+w = 0.
  const std::array<std::array<double, 4>, 4> forms{{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}};
  for (int t = 0; t < 2000; ++t) {
    double x = testing::uniform(-3, 3);
    double y = testing::uniform(-3, 3);
    double z = testing::uniform(-3, 3);
    double w = testing::uniform(-3, 3);
    const std::size_t k = static_cast<std::size_t>(t % 5);
    if (k < 4) w = -(forms[k][0] * x + forms[k][1] * y + forms[k][2] * z) / forms[k][3];
    bool on_plane = false;
    for (const auto& f : forms) on_plane = on_plane || std::abs(f[0] * x + f[1] * y + f[2] * z + f[3] * w) <= 1e-12;
    const auto b = Bihyperbolic::from_canonical(canon(x, y, z, w));
    CHECK(is_in_null_cone(b) == on_plane);
    if (is_zero_divisor(b)) {
      for (int i = 1; i <= 4; ++i) {
        if (std::abs(b[static_cast<std::size_t>(i - 1)]) <= kNullConeTol) {
          CHECK(near(b * Bihyperbolic::idempotent(i), Bihyperbolic::zero(), 1e-12));
        }
      }
    }
  }
}

TEST_CASE("zero divisor annihilated by an idempotent") {
  const auto b = lam(3, 0, -2, 5);
  REQUIRE(is_zero_divisor(b));
  CHECK(b * Bihyperbolic::idempotent(2) == Bihyperbolic::zero());
}

TEST_CASE("modulus") {
  CHECK(modulus(Bihyperbolic::zero()) == Bihyperbolic::zero());
  CHECK(modulus(Bihyperbolic::j1()) == Bihyperbolic::one());
  CHECK(modulus(lam(-2, 3, 0, -1)) == lam(2, 3, 0, 1));
  for (int t = 0; t < 10000; ++t) {
    const auto a = testing::random_number();
    const auto b = testing::random_number();
    REQUIRE(near(modulus(a * b), modulus(a) * modulus(b), 1e-12));
    const auto rel = compare(modulus(a + b), modulus(a) + modulus(b));
    REQUIRE((rel.kind == Ordering::Less || rel.kind == Ordering::Equal));
  }
}

TEST_CASE("compare") {
  const auto e1 = Bihyperbolic::idempotent(1);
  CHECK(compare(e1, Bihyperbolic::one()) == OrderRelation{Ordering::Less, false});
  CHECK(compare(Bihyperbolic::one(), e1) == OrderRelation{Ordering::Greater, false});
  CHECK(compare(e1, Bihyperbolic::idempotent(2)).kind == Ordering::Incomparable);
  CHECK(compare(lam(1, 2, 3, 4), lam(1, 2, 3, 4)).kind == Ordering::Equal);
  CHECK(compare(lam(0, 0, 0, 0), lam(1, 2, 3, 4)) == OrderRelation{Ordering::Less, true});
  CHECK(strictly_precedes(Bihyperbolic::zero(), Bihyperbolic::one()));
  CHECK_FALSE(strictly_precedes(Bihyperbolic::zero(), e1));
  CHECK(precedes(e1, Bihyperbolic::one()));
  CHECK(precedes(lam(1 + 1e-10, 0, 0, 0), e1, 1e-9));
  CHECK_FALSE(precedes(lam(1 + 1e-10, 0, 0, 0), e1));
  CHECK(is_nonnegative(e1));
  CHECK_FALSE(is_positive(e1));
  CHECK(is_positive(lam(1, 2, 0.5, 3)));
}

TEST_CASE("order is compatible with the ring") {
  for (int t = 0; t < 5000; ++t) {
    const auto a = testing::random_number();
    const auto d = testing::random_number(0, 2);
    const auto b = a + d;
    const auto xi = testing::random_number(0, 3);
    REQUIRE(precedes(a, b));
    REQUIRE(precedes(a * xi, b * xi, 1e-12));
    REQUIRE(precedes(-b, -a));
    REQUIRE(precedes(a + xi, b + xi, 1e-12));
  }
}

TEST_CASE("sup and inf") {
  const std::vector<Bihyperbolic> pair{Bihyperbolic::idempotent(1), Bihyperbolic::idempotent(2)};
  CHECK(sup_h2(pair) == lam(1, 1, 0, 0));
  CHECK(inf_h2(pair) == Bihyperbolic::zero());
  const std::vector<Bihyperbolic> one{lam(1, -2, 3, -4)};
  CHECK(sup_h2(one) == one[0]);
  CHECK(is_error(ErrorCode::EmptySet, [] { (void)sup_h2({}); }));
  CHECK(is_error(ErrorCode::EmptySet, [] { (void)inf_h2({}); }));
  for (int t = 0; t < 500; ++t) {
    std::vector<Bihyperbolic> s;
    for (int i = 0; i < 5; ++i) s.push_back(testing::random_number());
    const auto hi = sup_h2(s);
    const auto lo = inf_h2(s);
    for (const auto& v : s) {
      CHECK(precedes(v, hi));
      CHECK(precedes(lo, v));
    }
  }
}

TEST_CASE("canonical text") {
  CHECK(parse_canonical_string("j1") == Bihyperbolic::j1());
  CHECK(parse_canonical_string("-2 j3") == Bihyperbolic::j3() * -2.0);
  CHECK(parse_canonical_string("e2") == Bihyperbolic::idempotent(2));
  CHECK(parse_canonical_string("1 + 0.5j1") == Bihyperbolic::one() + 0.5 * Bihyperbolic::j1());
  CHECK(to_canonical_string(Bihyperbolic::j3()) == "0 + 0 j1 + 0 j2 + 1 j3");
  for (int t = 0; t < 200; ++t) {
    const auto b = testing::random_number();
    CHECK(near(parse_canonical_string(to_canonical_string(b)), b, 1e-12));
  }
  CHECK(is_error(ErrorCode::InvalidInput, [] { (void)parse_canonical_string("1 + j4"); }));
  CHECK(is_error(ErrorCode::InvalidInput, [] { (void)parse_canonical_string(""); }));
}
