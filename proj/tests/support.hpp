#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "bihyp/bihyperbolic.hpp"
#include "bihyp/hvector.hpp"

namespace testing {

using bihyp::Bihyperbolic;
using bihyp::HVector;

inline std::mt19937_64& engine() {
  static std::mt19937_64 e(20261016);
  return e;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine()); }

inline Bihyperbolic random_number(double lo = -5.0, double hi = 5.0) {
  return Bihyperbolic::from_lambda(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi));
}

inline HVector random_vector(std::size_t dim, double scale = 3.0) {
  HVector::Components c;
  for (auto& v : c) {
    v.resize(dim);
    for (auto& e : v) e = uniform(-scale, scale);
  }
  return HVector::from_components(c);
}

inline HVector vec(std::array<std::vector<double>, 4> comps) { return HVector::from_components(std::move(comps)); }

inline bool near(const Bihyperbolic& a, const Bihyperbolic& b, double tol) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(a[k] - b[k]) > tol * std::max({1.0, std::abs(a[k]), std::abs(b[k])})) return false;
  }
  return true;
}

inline Bihyperbolic lam(double a, double b, double c, double d) { return Bihyperbolic::from_lambda(a, b, c, d); }

}  // namespace testing
