#include "negsssp/rng.hpp"

#include <cmath>

namespace negsssp {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix64(std::uint64_t x) { return splitmix64(x); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Reject draws from the incomplete top interval.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::int64_t Rng::geometric(double p) {
  if (p >= 1.0) {
    next();  // keep stream position independent of p
    return 1;
  }
  double u = unit();
  // Inverse CDF: smallest k >= 1 with 1 - (1-p)^k >= u.
  double k = std::floor(std::log1p(-u) / std::log1p(-p));
  if (k < 0) k = 0;
  if (k > 1e18) k = 1e18;
  return 1 + static_cast<std::int64_t>(k);
}

Rng Rng::child(std::uint64_t salt) const {
  std::uint64_t s = seed_ ^ 0x5851f42d4c957f2dULL;
  std::uint64_t h = splitmix64(s);
  s = h ^ mix64(salt);
  return Rng(splitmix64(s));
}

}  // namespace negsssp
