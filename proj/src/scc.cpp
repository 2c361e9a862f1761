#include "negsssp/scc.hpp"

#include <algorithm>

namespace negsssp {

SccResult scc(const Graph& g, std::span<const VertexId> verts,
              const char* excluded) {
  VertexId n = g.num_vertices();
  SccResult r;
  r.comp_of.assign(n, -1);

  std::vector<char> member(n, 0);
  for (VertexId v : verts) member[v] = 1;

  // Iterative Tarjan.  index/lowlink of 0 means unvisited (ids start at 1).
  std::vector<std::int32_t> index(n, 0), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::int32_t next_index = 1;

  struct Frame {
    VertexId v;
    std::size_t edge_pos;
  };
  std::vector<Frame> frames;

  for (VertexId root : verts) {
    if (index[root] != 0) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto adj = g.out_edges(f.v);
      bool descended = false;
      while (f.edge_pos < adj.size()) {
        EdgeId e = adj[f.edge_pos++];
        if (excluded != nullptr && excluded[e]) continue;
        VertexId u = g.edge(e).dst;
        if (!member[u]) continue;
        if (index[u] == 0) {
          index[u] = lowlink[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = 1;
          frames.push_back({u, 0});
          descended = true;
          break;
        }
        if (on_stack[u]) lowlink[f.v] = std::min(lowlink[f.v], index[u]);
      }
      if (descended) continue;
      VertexId v = f.v;
      frames.pop_back();
      if (!frames.empty())
        lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      if (lowlink[v] == index[v]) {
        std::vector<VertexId> comp;
        while (true) {
          VertexId u = stack.back();
          stack.pop_back();
          on_stack[u] = 0;
          comp.push_back(u);
          if (u == v) break;
        }
        std::sort(comp.begin(), comp.end());
        r.components.push_back(std::move(comp));
      }
    }
  }
  // Tarjan emits components in reverse topological order of the condensation.
  std::reverse(r.components.begin(), r.components.end());
  for (std::size_t i = 0; i < r.components.size(); ++i)
    for (VertexId v : r.components[i])
      r.comp_of[v] = static_cast<std::int32_t>(i);
  return r;
}

}  // namespace negsssp
