#pragma once

#include <span>
#include <vector>

#include "negsssp/graph.hpp"

namespace negsssp {

struct SccResult {
  // Components in a valid topological order of the condensation (every edge
  // of the restricted graph goes from an earlier component to a later one or
  // stays inside a component).  Each component lists its vertices ascending.
  std::vector<std::vector<VertexId>> components;
  // comp_of[v] = index into components, -1 for vertices outside the subset.
  std::vector<std::int32_t> comp_of;
};

// Strongly connected components of g restricted to `verts`, ignoring edges
// e with excluded[e] != 0 (excluded may be null).  Iterative Tarjan; output
// is deterministic for a fixed input.
SccResult scc(const Graph& g, std::span<const VertexId> verts,
              const char* excluded = nullptr);

}  // namespace negsssp
