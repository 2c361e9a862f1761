#include "negsssp/dijkstra.hpp"

#include <queue>

namespace negsssp {

namespace {
struct HeapEntry {
  Weight d;
  VertexId v;
  bool operator>(const HeapEntry& o) const {
    if (d != o.d) return d > o.d;
    return v > o.v;
  }
};
}  // namespace

DijkstraResult dijkstra(const Graph& g, const WeightView& w,
                        std::span<const VertexId> sources,
                        const DijkstraOptions& opt, OpsCounter& ops) {
  VertexId n = g.num_vertices();
  DijkstraResult r;
  r.dist.assign(n, kInfWeight);
  r.parent.assign(n, kNoEdge);
  std::vector<char> settled(n, 0);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;

  for (VertexId s : sources) {
    if (opt.member != nullptr && !opt.member[s]) continue;
    if (r.dist[s] == 0) continue;  // duplicate source
    r.dist[s] = 0;
    heap.push({0, s});
    ops.add();
  }
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    ops.add();
    if (settled[u] || d != r.dist[u]) continue;  // stale entry
    if (d > opt.radius) break;  // everything farther is out of range too
    settled[u] = 1;
    r.order.push_back(u);
    if (u == opt.target) break;
    auto adj = opt.reverse ? g.in_edges(u) : g.out_edges(u);
    for (EdgeId e : adj) {
      const Edge& ed = g.edge(e);
      VertexId v = opt.reverse ? ed.src : ed.dst;
      if (opt.member != nullptr && !opt.member[v]) continue;
      Weight we = w(e);
      if (we < 0) throw InternalError("dijkstra: negative weight in view");
      ops.add();
      if (r.dist[u] + we < r.dist[v]) {
        r.dist[v] = r.dist[u] + we;
        r.parent[v] = e;
        heap.push({r.dist[v], v});
        ops.add();
      }
    }
  }
  // Only settled vertices carry exact distances; clear the rest so callers
  // never see a tentative upper bound (matters in target and radius modes).
  for (VertexId v = 0; v < n; ++v)
    if (!settled[v] && r.dist[v] != kInfWeight) {
      r.dist[v] = kInfWeight;
      r.parent[v] = kNoEdge;
    }
  return r;
}

std::vector<EdgeId> dijkstra_path(const Graph& g, const DijkstraResult& r,
                                  VertexId v, bool reverse) {
  std::vector<EdgeId> path;
  VertexId cur = v;
  while (r.parent[cur] != kNoEdge) {
    EdgeId e = r.parent[cur];
    path.push_back(e);
    cur = reverse ? g.edge(e).dst : g.edge(e).src;
    if (path.size() > static_cast<std::size_t>(g.num_vertices()))
      throw InternalError("dijkstra_path: parent chain too long");
  }
  if (!reverse) std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace negsssp
