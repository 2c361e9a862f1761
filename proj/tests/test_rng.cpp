#include "doctest.h"
#include "negsssp/rng.hpp"

#include <cmath>
#include <set>
#include <vector>

using namespace negsssp;

TEST_CASE("same seed, same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next() == b.next()) ++equal;
  CHECK(equal < 4);
}

TEST_CASE("below stays in range and hits everything") {
  Rng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 4000; ++i) {
    std::uint64_t x = r.below(7);
    CHECK(x < 7);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  CHECK(r.below(1) == 0);
}

TEST_CASE("range is inclusive on both ends") {
  Rng r(11);
  bool lo = false, hi = false;
  for (int i = 0; i < 4000; ++i) {
    std::int64_t x = r.range(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
    lo = lo || x == -3;
    hi = hi || x == 3;
  }
  CHECK(lo);
  CHECK(hi);
  CHECK(r.range(-5, -5) == -5);
}

TEST_CASE("geometric mean tracks 1/p") {
  Rng r(3);
  const double p = 0.25;
  double sum = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    std::int64_t x = r.geometric(p);
    CHECK(x >= 1);
    sum += static_cast<double>(x);
  }
  double mean = sum / trials;
  CHECK(mean > 3.5);
  CHECK(mean < 4.5);
  CHECK(r.geometric(1.0) == 1);
}

TEST_CASE("child streams are stable and independent of parent use") {
  Rng a(99);
  Rng c1 = a.child(5);
  a.next();
  a.next();
  Rng c2 = Rng(99).child(5);
  for (int i = 0; i < 20; ++i) CHECK(c1.next() == c2.next());

  // Distinct salts give distinct streams.
  Rng d1 = Rng(99).child(6);
  Rng d2 = Rng(99).child(7);
  int equal = 0;
  for (int i = 0; i < 64; ++i)
    if (d1.next() == d2.next()) ++equal;
  CHECK(equal < 4);
}

TEST_CASE("unit stays in [0,1)") {
  Rng r(17);
  for (int i = 0; i < 1000; ++i) {
    double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
