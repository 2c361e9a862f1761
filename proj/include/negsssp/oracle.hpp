#pragma once

#include <optional>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

// Plain Bellman-Ford reference, O(n*m).  Used as the correctness baseline in
// tests and as the last-resort cycle extractor.

struct OracleSssp {
  std::vector<Weight> dist;         // kInfWeight where unreachable
  std::vector<EdgeId> parent_edge;  // kNoEdge at the source / unreachable
};

// Single-source distances; throws InputError if a negative cycle is
// reachable from the source.
OracleSssp oracle_bellman_ford(const Graph& g, const WeightView& w,
                               VertexId source, OpsCounter& ops);

// Finds a simple negative cycle anywhere in the graph, if one exists.
// Detection runs n full relaxation rounds from an all-zero start (implicit
// extra source into every vertex); a relaxation in the last round proves a
// cycle, which is then collected by walking parent edges.
std::optional<std::vector<EdgeId>> oracle_negative_cycle(const Graph& g,
                                                         const WeightView& w,
                                                         OpsCounter& ops);

}  // namespace negsssp
