#pragma once

#include <cstdint>
#include <vector>

#include "negsssp/decompose.hpp"
#include "negsssp/graph.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

struct ScaleConfig {
  DecomposeConfig decompose;
  // Re-check every invariant the construction is supposed to maintain
  // (component weights after recursion, final potential, ...).  Cheap
  // relative to the solve and on by default.
  bool checks = true;
  // Reduce cycle certificates to a simple cycle before returning.
  bool simplify_certificates = true;
};

struct NegCycleCertificate {
  std::vector<EdgeId> edges;  // closed walk in edge order
  Weight total = 0;           // under the input graph's raw weights, < 0
};

struct ScaleOutcome {
  enum class Kind { Potential, Cycle };
  Kind kind = Kind::Potential;
  Potential phi;             // valid when kind == Potential
  NegCycleCertificate cycle; // valid when kind == Cycle
};

struct ScaleStats {
  std::int64_t tree_nodes = 0;
  std::int64_t leaves = 0;
  std::int64_t max_depth = 0;
  std::int64_t bfd_iterations = 0;
  std::int64_t cycle_fallbacks = 0;  // times the reference extractor ran
  DecomposeStats decomp;
};

// Region hierarchy produced by repeated cutting.  Children are stored in a
// topological order of the residual components.
struct TreeNode {
  std::vector<VertexId> region;  // ascending
  Weight d = 0;                  // radius parameter at this node
  EdgeCut cut;                   // empty for leaves
  std::vector<std::int32_t> children;
  bool leaf = false;
  std::int32_t depth = 0;
};

struct DecompTree {
  std::vector<TreeNode> nodes;
  std::int32_t root = -1;
};

// Builds the hierarchy for one scaling round: the root covers every vertex
// with d = n*W/2, a node with d <= W/2 or a single vertex is a leaf, and a
// residual component keeps its parent's d when it holds at most 3/4 of the
// parent's vertices and halves it otherwise.  Cuts are measured in the
// W/2-shifted weights.
DecompTree build_decomposition_tree(const Graph& g, Weight W, Rng& rng,
                                    const DecomposeConfig& cfg,
                                    OpsCounter& ops, DecomposeStats* stats);

// Per-component offsets (one per entry of `comps`, each <= 0) that make
// every non-cut edge running between two components nonnegative under
// w(e) + mu[comp(src)] - mu[comp(dst)].  `comps` must be disjoint and
// topologically ordered with respect to the non-cut edges; a negative
// intra-component edge or a backward non-cut edge raises ContractError.
std::vector<Weight> fix_dag(const Graph& g, const WeightView& w,
                            const std::vector<std::vector<VertexId>>& comps,
                            const EdgeCut& cut, OpsCounter& ops);

// Extracts a simple cycle with negative raw-weight total from a closed walk
// whose total is negative: walking the edges, every simple loop closed along
// the way either is negative (returned) or is spliced out, which keeps the
// remainder negative.
std::vector<EdgeId> simplify_cycle(const Graph& g,
                                   const std::vector<EdgeId>& walk);

// One scaling round.  Input contract: W is a power of two >= 2 and every
// weight is >= -W.  Returns either a potential phi with
// w(e) + phi(src) - phi(dst) >= -W/2 for every edge, or a negative cycle
// certificate.  Randomness only affects which of the two comes back and how
// much work it takes, not their validity.
ScaleOutcome scale(const Graph& g, Weight W, Rng& rng, const ScaleConfig& cfg,
                   OpsCounter& ops, ScaleStats* stats = nullptr);

}  // namespace negsssp
