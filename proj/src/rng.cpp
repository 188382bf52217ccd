#include "bihyp/rng.hpp"

namespace bihyp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL)));
}

Bihyperbolic Rng::bihyperbolic(double lo, double hi) {
  return Bihyperbolic::from_lambda(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi));
}

}  // namespace bihyp
