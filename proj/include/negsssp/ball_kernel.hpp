#pragma once

#include <span>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

// Compact CSR copy of the subgraph induced by a vertex subset, with weights
// clamped at zero (the >=0 view balls are measured in).  An edge is positive
// in the underlying graph iff its clamped weight is > 0, so cut eligibility
// needs no extra storage.  Global edge ids are kept for cut reporting.
struct LocalGraph {
  struct Arc {
    VertexId to;  // local id
    Weight w;     // clamped, >= 0
    EdgeId id;    // edge id in the base graph
  };

  VertexId n = 0;
  std::vector<VertexId> global;  // local -> global, ascending
  std::vector<std::int32_t> out_start, in_start;
  std::vector<Arc> out_arcs, in_arcs;

  static LocalGraph build(const Graph& g, const WeightView& w,
                          std::span<const VertexId> verts);

  std::span<const Arc> out(VertexId v) const {
    return {out_arcs.data() + out_start[v], out_arcs.data() + out_start[v + 1]};
  }
  std::span<const Arc> in(VertexId v) const {
    return {in_arcs.data() + in_start[v], in_arcs.data() + in_start[v + 1]};
  }
};

// Reusable scratch for capped Dijkstra runs on a LocalGraph.  Stamped so a
// fresh run needs no O(n) clear.
struct BallScratch {
  std::vector<Weight> dist;
  std::vector<std::uint32_t> stamp;
  std::uint32_t cur = 0;
  void reset(VertexId n) {
    if (dist.size() < static_cast<std::size_t>(n)) {
      dist.resize(n);
      stamp.assign(n, 0);
      cur = 0;
    }
  }
};

// One capped single-source run.  Settles vertices of the active set (null =
// all) in distance order while 4*dist <= limit4 holds, stopping early once
// more than `settle_cap` vertices settled (settle_cap < 0 disables).
// Appends (vertex, dist) pairs to `out` in settling order; returns the number
// of elementary operations spent.
std::uint64_t capped_ball(const LocalGraph& lg, VertexId src, bool inward,
                          Weight limit4, std::int64_t settle_cap,
                          const char* active, BallScratch& scratch,
                          std::vector<std::pair<VertexId, Weight>>& out);

// Light/heavy classification at radius d/4 in the clamped subgraph: heavy
// means the ball holds more than half of the active vertices.
struct BallLabels {
  std::vector<char> out_heavy, in_heavy;  // indexed by local id
};

// Regions at or below this size are always classified exactly; larger ones
// fall back to the sampling estimator for whatever the certification rounds
// leave open.  Also the boundary below which decompose can afford the exact
// progress verifier on every attempt.
inline constexpr VertexId kClassifyExactCutoff = 600;

// Production kernel.  A few pivot rounds first: each computes one distance
// map pair around a pivot (radius d/2) and certifies heaviness/lightness of
// other vertices through triangle-inequality bounds routed via the pivot
// (binary searches over the sorted map).  These labels are exact.  Vertices
// the rounds leave open are classified exactly up to kClassifyExactCutoff
// active vertices (independent capped runs, OpenMP-parallel when available);
// above the cutoff their ball sizes are estimated from a fixed number of
// sampled centers seeded by `salt`, so labels next to the half-region
// threshold may differ from the exact answer there.  Results and operation
// counts are deterministic for any thread count.
BallLabels classify_balls(const LocalGraph& lg,
                          std::span<const VertexId> active_list, Weight d,
                          std::span<const VertexId> queries, OpsCounter& ops,
                          std::uint64_t salt = 0);

// Exact kernel at any size: pivot rounds plus the per-suspect fallback, never
// the estimator.  This is what the progress verifier uses.
BallLabels classify_balls_exact(const LocalGraph& lg,
                                std::span<const VertexId> active_list, Weight d,
                                std::span<const VertexId> queries,
                                OpsCounter& ops);

// Reference kernel: one full capped Dijkstra pair per queried vertex, serial.
BallLabels classify_balls_reference(const LocalGraph& lg,
                                    std::span<const VertexId> active_list,
                                    Weight d,
                                    std::span<const VertexId> queries,
                                    OpsCounter& ops);

// Vertices within (out-)distance at most r of the center, ascending.  Public
// ball primitive over an arbitrary nonnegative weight view of a base graph.
struct BallQuery {
  VertexId center;
  Weight radius;
  bool inward = false;
};
std::vector<VertexId> ball(const Graph& g, const WeightView& w, BallQuery q,
                           OpsCounter& ops);

}  // namespace negsssp
