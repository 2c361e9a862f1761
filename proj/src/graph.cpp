#include "negsssp/graph.hpp"

namespace negsssp {

Graph Graph::build(VertexId n, std::vector<Edge> edges) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  for (const Edge& e : g.edges_) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw InputError("edge endpoint out of range");
    Weight a = e.w < 0 ? -e.w : e.w;
    if (a > g.max_abs_w_) g.max_abs_w_ = a;
    if (e.w < g.min_w_) g.min_w_ = e.w;
  }
  g.out_start_.assign(n + 1, 0);
  g.in_start_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_start_[e.src + 1];
    ++g.in_start_[e.dst + 1];
  }
  for (VertexId v = 0; v < n; ++v) {
    g.out_start_[v + 1] += g.out_start_[v];
    g.in_start_[v + 1] += g.in_start_[v];
  }
  g.out_adj_.resize(g.edges_.size());
  g.in_adj_.resize(g.edges_.size());
  std::vector<std::int32_t> op(g.out_start_.begin(), g.out_start_.end() - 1);
  std::vector<std::int32_t> ip(g.in_start_.begin(), g.in_start_.end() - 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    g.out_adj_[op[g.edges_[e].src]++] = e;
    g.in_adj_[ip[g.edges_[e].dst]++] = e;
  }
  return g;
}

Graph Graph::with_weights(std::vector<Weight> w) const {
  if (w.size() != edges_.size())
    throw ContractError("with_weights: weight count mismatch");
  std::vector<Edge> es = edges_;
  for (std::size_t i = 0; i < es.size(); ++i) es[i].w = w[i];
  return Graph::build(n_, std::move(es));
}

WeightView raw_view(const Graph& g) { return WeightView{&g, 0, nullptr, false}; }

WeightView shift_weights(const Graph& g, Weight delta) {
  for (const Edge& e : g.edges()) {
    Weight out;
    if (__builtin_add_overflow(e.w, delta, &out))
      throw InputError("shift_weights: shifted weight overflows");
  }
  return WeightView{&g, delta, nullptr, false};
}

WeightView reweight(const Graph& g, const Potential& phi) {
  if (static_cast<VertexId>(phi.size()) != g.num_vertices())
    throw ContractError("reweight: potential size mismatch");
  return WeightView{&g, 0, phi.data(), false};
}

WeightView nonneg_view(WeightView v) {
  v.clamp_nonneg = true;
  return v;
}

void check_weight_bounds(const Graph& g) {
  unsigned __int128 n = static_cast<unsigned __int128>(g.num_vertices());
  unsigned __int128 budget = static_cast<unsigned __int128>(g.max_abs_weight());
  budget *= 2 * (n > 0 ? n : 1);
  budget *= (n + 1);
  // The extra factor keeps the solver's internal arithmetic (scaled weights,
  // shifted views, radius comparisons on a 4x scale) away from the edge of
  // the 64-bit range.
  if (budget > static_cast<unsigned __int128>(kInfWeight / 16))
    throw InputError(
        "weights too large for this vertex count: |w| * 2n * (n+1) * 16 "
        "must fit in a 64-bit integer");
}

}  // namespace negsssp
