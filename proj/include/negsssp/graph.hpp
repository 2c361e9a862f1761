#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "negsssp/types.hpp"

namespace negsssp {

struct Edge {
  VertexId src;
  VertexId dst;
  Weight w;
};

// Immutable directed multigraph.  Parallel edges and self-loops are allowed.
// Edge ids are positions in the original edge list and are stable across all
// derived views and subgraphs, so certificates can always be expressed as
// lists of edge ids of the input graph.
class Graph {
 public:
  Graph() = default;
  static Graph build(VertexId n, std::vector<Edge> edges);

  VertexId num_vertices() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const EdgeId> out_edges(VertexId v) const {
    return {out_adj_.data() + out_start_[v],
            out_adj_.data() + out_start_[v + 1]};
  }
  std::span<const EdgeId> in_edges(VertexId v) const {
    return {in_adj_.data() + in_start_[v], in_adj_.data() + in_start_[v + 1]};
  }

  Weight max_abs_weight() const { return max_abs_w_; }
  Weight min_weight() const { return min_w_; }

  // Same topology, new weights (must align with edge ids).
  Graph with_weights(std::vector<Weight> w) const;

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> out_start_, in_start_;
  std::vector<EdgeId> out_adj_, in_adj_;
  Weight max_abs_w_ = 0;
  Weight min_w_ = 0;
};

// Lazy weight function over a graph: raw -> shifted -> reweighted -> clamped,
// composed in that order.  Copyable value type; holds no ownership.
struct WeightView {
  const Graph* g = nullptr;
  Weight shift = 0;
  const Weight* phi = nullptr;  // potential, indexed by vertex id; may be null
  bool clamp_nonneg = false;

  Weight operator()(EdgeId e) const {
    const Edge& ed = g->edge(e);
    Weight w = ed.w + shift;
    if (phi != nullptr) w += phi[ed.src] - phi[ed.dst];
    if (clamp_nonneg && w < 0) w = 0;
    return w;
  }
};

using Potential = std::vector<Weight>;

WeightView raw_view(const Graph& g);

// Adds delta to every weight.  Rejects the view if any shifted weight would
// overflow the weight type.
WeightView shift_weights(const Graph& g, Weight delta);

// w_phi(uv) = w(uv) + phi(u) - phi(v).  Total function; no overflow check
// (engine potentials are bounded by the load-time weight budget).
WeightView reweight(const Graph& g, const Potential& phi);

// Same view with weights clamped below at zero.
WeightView nonneg_view(WeightView v);

// Load-time guard: every |w| * 2n * (n+1) must fit in Weight; callers can
// then take sums along simple paths (and the scaled graphs the solver builds
// internally) without overflow.  Throws InputError on violation.
void check_weight_bounds(const Graph& g);

}  // namespace negsssp
