#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/rng.hpp"
#include "negsssp/scale.hpp"

namespace negsssp {

struct RunBudget {
  // Per-attempt operation window is 2*T with
  // T = constant * (m + n*log2(n)) * log2(n)^2.
  double constant = 64.0;
  int attempt_cap = 50;  // randomized attempts per scaling round
  int restart_cap = 3;   // additional full solves after an internal error
};

struct SolveConfig {
  std::uint64_t seed = 0;
  RunBudget budget;
  ScaleConfig scale;
  // Test seam: called at the start of every scaling attempt with
  // (round index, attempt index); may throw to simulate failures.
  std::function<void(std::int64_t, int)> attempt_probe;
};

struct SolveStats {
  std::int64_t scale_rounds = 0;
  std::int64_t attempts = 0;  // scaling attempts, successful ones included
  std::int64_t restarts = 0;
  std::int64_t bfd_iterations = 0;
  std::int64_t cycle_fallbacks = 0;
  std::int64_t decompose_calls = 0;
  std::int64_t decompose_retries = 0;
  std::uint64_t ops = 0;
  Weight initial_w = 0;
};

struct SsspResult {
  enum class Kind { Tree, Cycle };
  Kind kind = Kind::Tree;
  VertexId source = kNoVertex;
  // Tree outcome: distances under the input weights (kInfWeight where
  // unreachable) plus the parent edge of each reached non-source vertex.
  std::vector<Weight> dist;
  std::vector<EdgeId> parent;
  // Cycle outcome: a simple cycle with negative total under the input
  // weights.
  NegCycleCertificate cycle;
};

// Exact single-source shortest paths with integer (possibly negative)
// weights, or a negative cycle if the graph has one anywhere.  Randomness
// affects only running time; every returned object is verified before the
// call returns (tree against the triangle inequality, cycle by recomputing
// its total).
SsspResult sssp(const Graph& g, VertexId source, const SolveConfig& cfg = {},
                SolveStats* stats = nullptr);

// Certificate checks, also used by the CLI `verify` subcommand.  On failure
// the optional out-parameter receives a one-line reason.

// dist/parent form a valid shortest-path tree for g from source: the source
// has dist 0 and no parent, every reached vertex's parent edge is tight,
// parents connect back to the source acyclically, no edge undercuts its
// head's distance, and unreached vertices have no incoming edge from a
// reached one.
bool verify_tree(const Graph& g, VertexId source,
                 const std::vector<Weight>& dist,
                 const std::vector<EdgeId>& parent,
                 std::string* reason = nullptr);

// Edges form a closed connected walk with negative total weight.
bool verify_cycle(const Graph& g, const std::vector<EdgeId>& edges,
                  std::string* reason = nullptr);

// Every edge satisfies w(e) + phi(src) - phi(dst) >= bound.
bool verify_potential(const Graph& g, const Potential& phi, Weight bound,
                      std::string* reason = nullptr);

// Per-attempt operation window (the 2*T above).
std::uint64_t budget_window(VertexId n, EdgeId m, double constant);

// Runs `attempt(rng)` with a fresh derived seed and an armed operation
// budget until it returns a value: budget overruns and rejected outcomes
// (nullopt) both trigger a retry.  Throws InternalError once `cap` attempts
// are spent.  `fn` must leave no observable state behind when it fails.
template <typename Fn>
auto las_vegas_run(Fn&& fn, OpsCounter& ops, std::uint64_t window,
                   std::uint64_t seed, std::uint64_t salt, int cap,
                   std::int64_t* attempts_out)
    -> typename std::invoke_result_t<Fn&, Rng&, int>::value_type {
  Rng stream = Rng(seed).child(salt);
  for (int attempt = 0; attempt < cap; ++attempt) {
    if (attempts_out != nullptr) ++*attempts_out;
    Rng rng = stream.child(static_cast<std::uint64_t>(attempt));
    std::uint64_t old_limit = ops.arm(window);
    try {
      auto out = fn(rng, attempt);
      ops.set_limit(old_limit);
      if (out.has_value()) return std::move(*out);
    } catch (const BudgetExceeded&) {
      ops.set_limit(old_limit);
    }
  }
  throw InternalError("las_vegas_run: attempt cap exhausted");
}

}  // namespace negsssp
