#pragma once

#include <cstdint>
#include <random>

namespace negsssp {

// SplitMix64 step; used for seed mixing and stream derivation.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix64(std::uint64_t x);

// Seeded PRNG wrapper.  The engine (mt19937_64) is bit-specified by the
// standard; the distributions below are hand-rolled so draws do not depend on
// library internals.  Child streams are derived by hashing (seed, salt), so a
// node's randomness does not depend on how much its siblings consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(mix64(seed)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n >= 1.  Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double unit();

  // Geometric on {1, 2, ...} with success probability p in (0, 1].
  // Mean 1/p.  p == 1 always yields 1.
  std::int64_t geometric(double p);

  Rng child(std::uint64_t salt) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace negsssp
