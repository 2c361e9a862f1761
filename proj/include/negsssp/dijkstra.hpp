#pragma once

#include <span>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

struct DijkstraOptions {
  // Stop after this vertex is settled (kNoVertex = run to exhaustion).
  VertexId target = kNoVertex;
  // Only settle vertices with dist <= radius (kInfWeight = unbounded).
  Weight radius = kInfWeight;
  // If non-null, only vertices v with member[v] != 0 participate.
  const char* member = nullptr;
  // Relax reversed edges (distances *to* the sources).
  bool reverse = false;
};

struct DijkstraResult {
  std::vector<Weight> dist;     // kInfWeight where unsettled
  std::vector<EdgeId> parent;   // kNoEdge at sources / unsettled
  std::vector<VertexId> order;  // settled vertices in settling order
};

// Binary-heap Dijkstra with lazy deletion.  All weights visible through the
// view must be nonnegative; a negative weight raises InternalError (checked
// at relax time).  Ties in the heap break on vertex id, so the result is
// deterministic for a fixed input.
DijkstraResult dijkstra(const Graph& g, const WeightView& w,
                        std::span<const VertexId> sources,
                        const DijkstraOptions& opt, OpsCounter& ops);

// Follows parent pointers from v back to a source; returns edge ids in path
// order.  v must be settled.
std::vector<EdgeId> dijkstra_path(const Graph& g, const DijkstraResult& r,
                                  VertexId v, bool reverse = false);

}  // namespace negsssp
