#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

enum class BfdStatus {
  Completed,       // fixpoint reached; d is exact for the restricted graph
  Violated,        // some recorded path's companion length passed the threshold
  IterationLimit,  // still improving after max_iters; negative cycle suspected
};

struct BfdConfig {
  // Companion weight accumulated along every recorded path (not minimized).
  // Null means the companion values stay 0.
  const WeightView* aux = nullptr;
  // With a threshold set, the run stops once an updated vertex's companion
  // value exceeds it (strictly), reporting the smallest such vertex id of
  // that iteration.  Also lifts the default iteration cap: a threshold run
  // is cut off by the violation or the operation budget instead.
  std::optional<Weight> threshold;
  // Full iterations to run; -1 picks |members| + 1 (enough to converge when
  // no negative cycle exists), or effectively unbounded under a threshold.
  std::int64_t max_iters = -1;
  // Called after each iteration's Dijkstra pass with (iteration, d by member
  // rank): d then equals the exact minimum over paths using fewer than
  // `iteration` negative edges.
  std::function<void(int, std::span<const Weight>)> checkpoint;
};

struct BfdResult {
  BfdStatus status = BfdStatus::IterationLimit;
  int iterations = 0;
  std::vector<VertexId> members;  // ascending; ranks index d/aux/cur
  std::vector<Weight> d;          // final distances from the virtual source
  std::vector<Weight> aux;        // companion value of each recorded path
  VertexId violator = kNoVertex;  // global id, set when status == Violated

  // Append-only version pool for path recovery.  pred always points at an
  // older entry, so witness chains cannot loop.
  struct Entry {
    VertexId vertex;
    Weight d, aux;
    EdgeId via;         // kNoEdge for the initial zero entries
    std::int32_t pred;  // pool index, -1 for the initial entries
  };
  std::vector<Entry> pool;
  std::vector<std::int32_t> cur;  // member rank -> pool index

  std::int64_t rank_of(VertexId v) const;  // -1 if not a member
};

// Shortest paths from a virtual source with zero-weight edges onto every
// member, restricted to edges with both endpoints in `members` (ascending,
// unique).  Each iteration is one simultaneous relaxation round over the
// negative edges (skipped on the first) followed by a Dijkstra pass over the
// nonnegative ones, so iteration i ends with d = exact minimum over paths
// with fewer than i negative edges.  Stops at a fixpoint, a companion
// threshold violation, or the iteration cap.
BfdResult bellman_ford_dijkstra(const Graph& g, const WeightView& primary,
                                std::span<const VertexId> members,
                                const BfdConfig& cfg, OpsCounter& ops);

// A recorded member-to-vertex path, in edge order.
struct PathWitness {
  VertexId start = kNoVertex;
  VertexId end = kNoVertex;
  std::vector<EdgeId> edges;
  Weight primary = 0;
  Weight aux = 0;
};

// Walks the version pool chain for v, checks the edges join up, and
// recomputes both totals; a mismatch with the recorded values is an
// InternalError.  Pass the same views the run used.
PathWitness recover_path(const Graph& g, const WeightView& primary,
                         const WeightView* aux, const BfdResult& r,
                         VertexId v);

}  // namespace negsssp
