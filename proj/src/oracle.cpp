#include "negsssp/oracle.hpp"

#include <algorithm>

namespace negsssp {

namespace {

// One full relaxation round; returns whether anything improved.  A vertex at
// kInfWeight never relaxes outward, so unreachable stays unreachable.
bool relax_round(const Graph& g, const WeightView& w, std::vector<Weight>& d,
                 std::vector<EdgeId>& par, std::uint64_t& spent) {
  bool changed = false;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    ++spent;
    const Edge& ed = g.edge(e);
    if (d[ed.src] == kInfWeight) continue;
    Weight nd = d[ed.src] + w(e);
    if (nd < d[ed.dst]) {
      d[ed.dst] = nd;
      par[ed.dst] = e;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

OracleSssp oracle_bellman_ford(const Graph& g, const WeightView& w,
                               VertexId source, OpsCounter& ops) {
  if (source < 0 || source >= g.num_vertices())
    throw InputError("oracle: source out of range");
  OracleSssp r;
  r.dist.assign(g.num_vertices(), kInfWeight);
  r.parent_edge.assign(g.num_vertices(), kNoEdge);
  r.dist[source] = 0;
  std::uint64_t spent = 1;
  bool changed = true;
  for (VertexId round = 1; round < g.num_vertices() && changed; ++round)
    changed = relax_round(g, w, r.dist, r.parent_edge, spent);
  if (changed && relax_round(g, w, r.dist, r.parent_edge, spent)) {
    ops.add(spent);
    throw InputError("oracle: negative cycle reachable from source");
  }
  ops.add(spent);
  return r;
}

std::optional<std::vector<EdgeId>> oracle_negative_cycle(const Graph& g,
                                                         const WeightView& w,
                                                         OpsCounter& ops) {
  const VertexId n = g.num_vertices();
  std::vector<Weight> d(n, 0);
  std::vector<EdgeId> par(n, kNoEdge);
  std::uint64_t spent = 1;
  bool changed = false;
  VertexId witness = kNoVertex;
  for (VertexId round = 0; round < n; ++round) {
    changed = false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      ++spent;
      const Edge& ed = g.edge(e);
      Weight nd = d[ed.src] + w(e);
      if (nd < d[ed.dst]) {
        d[ed.dst] = nd;
        par[ed.dst] = e;
        changed = true;
        witness = ed.dst;
      }
    }
    if (!changed) break;
  }
  ops.add(spent);
  if (!changed) return std::nullopt;

  // A relaxation in round n proves the parent graph contains a cycle, and
  // any such cycle is negative.  n parent steps from the witness must land
  // inside one.
  VertexId at = witness;
  for (VertexId i = 0; i < n; ++i) at = g.edge(par[at]).src;
  std::vector<EdgeId> cycle;
  std::vector<char> seen(n, 0);
  VertexId v = at;
  while (!seen[v]) {
    seen[v] = 1;
    cycle.push_back(par[v]);
    v = g.edge(par[v]).src;
  }
  // The walk may have an acyclic tail before first reaching the loop vertex
  // v; the tail edges sit at the front (they lead into earlier-walked
  // vertices).  Keep only the part from v's own parent edge onward.
  auto loop_from = std::find_if(cycle.begin(), cycle.end(), [&](EdgeId e) {
    return g.edge(e).dst == v;
  });
  cycle.erase(cycle.begin(), loop_from);
  std::reverse(cycle.begin(), cycle.end());
  ops.add(cycle.size() + n);

  Weight total = 0;
  VertexId chase = v;
  for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) {
    const Edge& ed = g.edge(*it);
    if (ed.dst != chase) throw InternalError("oracle: broken cycle chain");
    chase = ed.src;
    total += w(*it);
  }
  if (chase != v || total >= 0)
    throw InternalError("oracle: extracted cycle is not negative");
  return cycle;
}

}  // namespace negsssp
