#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "bihyp/bihyperbolic.hpp"

namespace bihyp {

/// Deterministic random stream. Each trial of a check draws from
/// Rng::stream(seed, trial), so trials are independent of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t index);

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  double exponential() { return std::exponential_distribution<double>(1.0)(engine_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool coin() { return index(2) == 1; }

  /// Bihyperbolic with each λ component uniform in [lo, hi].
  Bihyperbolic bihyperbolic(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bihyp
