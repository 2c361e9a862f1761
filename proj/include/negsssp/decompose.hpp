#pragma once

#include <optional>
#include <span>
#include <vector>

#include "negsssp/ball_kernel.hpp"
#include "negsssp/graph.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

// Edge ids of the base graph, ascending.  Every cut edge has positive weight
// under the working view.
using EdgeCut = std::vector<EdgeId>;

struct DecomposeConfig {
  // Carve radius follows min(Geometric(p), d/4) with
  // p = min(1, radius_constant * ln(region size) / d).  The constant trades
  // cut sparsity (smaller = fewer, larger balls) against the chance that a
  // geometric draw overshoots d/4, which carves an oversized ball and can
  // force a verification retry; that chance decays like n^(-c/4).
  double radius_constant = 8.0;
  int retry_cap = 100;
};

struct DecomposeStats {
  std::uint64_t calls = 0;
  std::uint64_t retries = 0;  // verification failures across all calls
  std::uint64_t cut_edges = 0;
};

// Randomized low-diameter edge cut of the subgraph induced by `verts` under
// weight view `w` (negative weights allowed; balls use the clamped view).
// Postcondition, certified by verify_progress before returning: every SCC of
// the subgraph minus the cut either has at most 3/4 of the vertices, or all
// of its vertices have in- and out-balls of radius d/4 holding more than half
// of them.  Verification failure re-runs with fresh randomness, up to
// retry_cap times (InternalError past that).
EdgeCut decompose(const Graph& g, const WeightView& w,
                  std::span<const VertexId> verts, Weight d, Rng& rng,
                  const DecomposeConfig& cfg, OpsCounter& ops,
                  DecomposeStats* stats = nullptr);

// Checks the decompose postcondition for a given cut.  Also rejects cuts
// containing nonpositive-weight or out-of-subgraph edges.
bool verify_progress(const Graph& g, const WeightView& w,
                     std::span<const VertexId> verts, Weight d,
                     const EdgeCut& cut, OpsCounter& ops);

}  // namespace negsssp
