#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace negsssp {

using Weight = std::int64_t;
using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Weight kInfWeight = std::numeric_limits<Weight>::max();
inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

// Input that cannot be turned into a graph (syntax, id range, weight bounds).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// An invariant the algorithm itself guarantees failed to hold; indicates a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown from hot loops when the current attempt exceeds its operation budget.
// Caught by the Las Vegas runner, which restarts with a fresh seed.
struct BudgetExceeded {};

// Counts elementary operations (edge relaxations + heap operations).  The
// count is deterministic for a fixed (instance, seed) regardless of thread
// count: parallel kernels accumulate per-thread sums and add them in one call.
class OpsCounter {
 public:
  void add(std::uint64_t k = 1) {
    total_ += k;
    if (total_ > limit_) throw BudgetExceeded{};
  }
  std::uint64_t total() const { return total_; }
  // Arms the budget: the counter may advance `window` more units before
  // add() throws.  Returns the previous limit so callers can restore it.
  std::uint64_t arm(std::uint64_t window) {
    std::uint64_t old = limit_;
    limit_ = (window > std::numeric_limits<std::uint64_t>::max() - total_)
                 ? std::numeric_limits<std::uint64_t>::max()
                 : total_ + window;
    return old;
  }
  void set_limit(std::uint64_t limit) { limit_ = limit; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t total_ = 0;
  std::uint64_t limit_ = std::numeric_limits<std::uint64_t>::max();
};

}  // namespace negsssp
