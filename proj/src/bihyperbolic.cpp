#include "bihyp/bihyperbolic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bihyp/error.hpp"

namespace bihyp {

namespace {

void require_finite(const Bihyperbolic::Lambda& l, const char* what) {
  for (double v : l) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidInput, std::string(what) + ": non-finite component");
    }
  }
}

}  // namespace

Bihyperbolic Bihyperbolic::from_lambda(const Lambda& lambda) {
  require_finite(lambda, "idempotent coordinates");
  Bihyperbolic b;
  b.lambda_ = lambda;
  return b;
}

Bihyperbolic Bihyperbolic::from_canonical(const CanonicalCoords& c) {
  require_finite({c.x, c.y, c.z, c.w}, "canonical coordinates");
  Bihyperbolic b;
  b.lambda_ = {c.x + c.y + c.z + c.w,
               c.x - c.y + c.z - c.w,
               c.x + c.y - c.z - c.w,
               c.x - c.y - c.z + c.w};
  return b;
}

CanonicalCoords Bihyperbolic::to_canonical() const noexcept {
  const auto& l = lambda_;
  return {(l[0] + l[1] + l[2] + l[3]) / 4.0,
          (l[0] - l[1] + l[2] - l[3]) / 4.0,
          (l[0] + l[1] - l[2] - l[3]) / 4.0,
          (l[0] - l[1] - l[2] + l[3]) / 4.0};
}

Bihyperbolic Bihyperbolic::idempotent(int i) {
  if (i < 1 || i > 4) {
    throw Error(ErrorCode::BadIndex, "idempotent index must be in 1..4, got " + std::to_string(i));
  }
  Bihyperbolic b;
  b.lambda_[static_cast<std::size_t>(i - 1)] = 1.0;
  return b;
}

Bihyperbolic Bihyperbolic::j1() noexcept { return from_canonical({0, 1, 0, 0}); }
Bihyperbolic Bihyperbolic::j2() noexcept { return from_canonical({0, 0, 1, 0}); }
Bihyperbolic Bihyperbolic::j3() noexcept { return from_canonical({0, 0, 0, 1}); }

Bihyperbolic& Bihyperbolic::operator+=(const Bihyperbolic& o) noexcept {
  for (std::size_t k = 0; k < 4; ++k) lambda_[k] += o.lambda_[k];
  return *this;
}

Bihyperbolic& Bihyperbolic::operator-=(const Bihyperbolic& o) noexcept {
  for (std::size_t k = 0; k < 4; ++k) lambda_[k] -= o.lambda_[k];
  return *this;
}

Bihyperbolic& Bihyperbolic::operator*=(const Bihyperbolic& o) noexcept {
  for (std::size_t k = 0; k < 4; ++k) lambda_[k] *= o.lambda_[k];
  return *this;
}

Bihyperbolic& Bihyperbolic::operator*=(double s) noexcept {
  for (double& v : lambda_) v *= s;
  return *this;
}

Bihyperbolic operator-(Bihyperbolic a) noexcept {
  for (double& v : a.lambda_) v = -v;
  return a;
}

Bihyperbolic inverse(const Bihyperbolic& b, double tol) {
  if (is_in_null_cone(b, tol)) {
    throw Error(ErrorCode::NotInvertible, "element lies in the null cone");
  }
  Bihyperbolic::Lambda r{};
  for (std::size_t k = 0; k < 4; ++k) r[k] = 1.0 / b[k];
  return Bihyperbolic::from_lambda(r);
}

bool is_in_null_cone(const Bihyperbolic& b, double tol) noexcept {
  return std::ranges::any_of(b.lambda(), [tol](double v) { return std::abs(v) <= tol; });
}

bool is_zero_divisor(const Bihyperbolic& b, double tol) noexcept {
  const bool nonzero = std::ranges::any_of(b.lambda(), [tol](double v) { return std::abs(v) > tol; });
  return nonzero && is_in_null_cone(b, tol);
}

Bihyperbolic modulus(const Bihyperbolic& b) noexcept {
  const auto& l = b.lambda();
  return Bihyperbolic::from_lambda(std::abs(l[0]), std::abs(l[1]), std::abs(l[2]), std::abs(l[3]));
}

OrderRelation compare(const Bihyperbolic& a, const Bihyperbolic& b) noexcept {
  int less = 0;
  int greater = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (a[k] < b[k]) ++less;
    else if (a[k] > b[k]) ++greater;
  }
  if (less == 0 && greater == 0) return {Ordering::Equal, false};
  if (greater == 0) return {Ordering::Less, less == 4};
  if (less == 0) return {Ordering::Greater, greater == 4};
  return {Ordering::Incomparable, false};
}

bool precedes(const Bihyperbolic& a, const Bihyperbolic& b, double slack) noexcept {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!(a[k] <= b[k] + slack)) return false;
  }
  return true;
}

bool strictly_precedes(const Bihyperbolic& a, const Bihyperbolic& b) noexcept {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!(a[k] < b[k])) return false;
  }
  return true;
}

bool is_nonnegative(const Bihyperbolic& b) noexcept { return precedes(Bihyperbolic::zero(), b); }

bool is_positive(const Bihyperbolic& b) noexcept { return strictly_precedes(Bihyperbolic::zero(), b); }

namespace {

template <typename Pick>
Bihyperbolic fold(std::span<const Bihyperbolic> values, Pick pick, const char* what) {
  if (values.empty()) {
    throw Error(ErrorCode::EmptySet, std::string(what) + " of an empty set");
  }
  Bihyperbolic::Lambda acc = values.front().lambda();
  for (const auto& v : values.subspan(1)) {
    for (std::size_t k = 0; k < 4; ++k) acc[k] = pick(acc[k], v[k]);
  }
  return Bihyperbolic::from_lambda(acc);
}

}  // namespace

Bihyperbolic sup_h2(std::span<const Bihyperbolic> values) {
  return fold(values, [](double a, double b) { return std::max(a, b); }, "supremum");
}

Bihyperbolic inf_h2(std::span<const Bihyperbolic> values) {
  return fold(values, [](double a, double b) { return std::min(a, b); }, "infimum");
}

std::string to_canonical_string(const Bihyperbolic& b) {
  const auto c = b.to_canonical();
  std::ostringstream out;
  out.precision(17);
  out << c.x;
  const std::pair<double, const char*> terms[] = {{c.y, "j1"}, {c.z, "j2"}, {c.w, "j3"}};
  for (const auto& [coef, unit] : terms) {
    if (std::signbit(coef)) out << " - " << -coef << ' ' << unit;
    else out << " + " << coef << ' ' << unit;
  }
  return out.str();
}

Bihyperbolic parse_canonical_string(std::string_view text) {
  const std::string s(text);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::InvalidInput, why + " in '" + s + "'");
  };

  skip_ws();
  if (pos == s.size()) throw Error(ErrorCode::InvalidInput, "empty number text");

  Bihyperbolic acc;
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == s.size()) break;
    double sign = 1.0;
    bool had_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      had_sign = true;
      ++pos;
      skip_ws();
    }
    if (pos == s.size()) throw fail("dangling sign");
    if (!had_sign && !first) throw fail("missing operator");
    first = false;

    bool had_coef = false;
    double coef = 1.0;
    if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.') {
      const char* begin = s.c_str() + pos;
      char* end = nullptr;
      coef = std::strtod(begin, &end);
      if (end == begin) throw fail("bad number");
      pos += static_cast<std::size_t>(end - begin);
      had_coef = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }

    Bihyperbolic unit = Bihyperbolic::one();
    if (pos + 1 < s.size() && (s[pos] == 'j' || s[pos] == 'e') &&
        std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      const int idx = s[pos + 1] - '0';
      if (s[pos] == 'j') {
        if (idx == 1) unit = Bihyperbolic::j1();
        else if (idx == 2) unit = Bihyperbolic::j2();
        else if (idx == 3) unit = Bihyperbolic::j3();
        else throw fail("unknown unit");
      } else {
        if (idx < 1 || idx > 4) throw fail("unknown unit");
        unit = Bihyperbolic::idempotent(idx);
      }
      pos += 2;
    } else if (!had_coef) {
      throw fail("cannot parse term");
    }
    skip_ws();
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw fail("unexpected character");
    acc += unit * (sign * coef);
  }
  return Bihyperbolic::from_lambda(acc.lambda());
}

std::string_view ordering_name(Ordering o) noexcept {
  switch (o) {
    case Ordering::Equal: return "Equal";
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

}  // namespace bihyp
