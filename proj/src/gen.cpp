#include "negsssp/gen.hpp"

#include <algorithm>
#include <numeric>

namespace negsssp {

namespace {

void check_common(const GenSpec& s) {
  if (s.n < 0 || s.m < 0) throw InputError("gen: negative size");
  if (s.wmin > s.wmax) throw InputError("gen: wmin > wmax");
  if (s.m > 0 && s.n == 0) throw InputError("gen: arcs need vertices");
}

std::vector<Edge> any_edges(const GenSpec& s, Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(s.m);
  for (EdgeId e = 0; e < s.m; ++e) {
    auto u = static_cast<VertexId>(rng.below(s.n));
    auto v = static_cast<VertexId>(rng.below(s.n));
    edges.push_back({u, v, rng.range(s.wmin, s.wmax)});
  }
  return edges;
}

// Negative-cycle-free instances are built structurally, so the guarantee
// holds for any size without rejection sampling.  With a mixed range a
// hidden potential psi is drawn and each arc gets w = s + psi(dst) -
// psi(src) with slack s >= 0; around any cycle the potential telescopes
// away and the total is the nonnegative slack sum.  Arcs whose endpoint
// pair cannot fit the range (potential drop above wmax) redraw the pair;
// about half of all pairs are always feasible.  All-negative ranges force
// a DAG instead: arcs are reoriented forward in a hidden shuffled order.
Graph negfree(const GenSpec& s, Rng& rng, EdgeId arc_count) {
  std::vector<Edge> edges;
  edges.reserve(arc_count);

  if (s.wmax < 0) {
    if (s.n < 2 && arc_count > 0)
      throw InputError("gen: all-negative weights need n >= 2");
    std::vector<VertexId> order(s.n);
    std::iota(order.begin(), order.end(), 0);
    for (VertexId i = s.n; i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<VertexId> rank(s.n);
    for (VertexId i = 0; i < s.n; ++i) rank[order[i]] = i;
    for (EdgeId e = 0; e < arc_count; ++e) {
      auto u = static_cast<VertexId>(rng.below(s.n));
      auto v = static_cast<VertexId>(rng.below(s.n));
      while (u == v) v = static_cast<VertexId>(rng.below(s.n));
      if (rank[u] > rank[v]) std::swap(u, v);
      edges.push_back({u, v, rng.range(s.wmin, s.wmax)});
    }
    return Graph::build(s.n, std::move(edges));
  }

  if (s.wmin >= 0) return Graph::build(s.n, any_edges(s, rng));

  std::vector<Weight> psi(s.n);
  for (VertexId v = 0; v < s.n; ++v) psi[v] = rng.range(0, -s.wmin);
  for (EdgeId e = 0; e < arc_count; ++e) {
    VertexId u, v;
    Weight drop;
    do {
      u = static_cast<VertexId>(rng.below(s.n));
      v = static_cast<VertexId>(rng.below(s.n));
      drop = psi[v] - psi[u];
    } while (drop > s.wmax);
    edges.push_back({u, v, drop + rng.range(0, s.wmax - drop)});
  }
  return Graph::build(s.n, std::move(edges));
}

}  // namespace

Graph gen_random(const GenSpec& spec, Rng& rng) {
  check_common(spec);
  switch (spec.mode) {
    case GenMode::Any:
      return Graph::build(spec.n, any_edges(spec, rng));
    case GenMode::NegativeFree:
      return negfree(spec, rng, spec.m);
    case GenMode::PlantedCycle: {
      if (spec.wmin >= 0)
        throw InputError("gen: a planted negative cycle needs wmin < 0");
      if (spec.n < 2)
        throw InputError("gen: a planted cycle needs n >= 2");
      if (spec.m < 2)
        throw InputError("gen: a planted cycle needs m >= 2");
      auto cap = std::min<std::uint64_t>(
          {static_cast<std::uint64_t>(spec.n), 8,
           static_cast<std::uint64_t>(spec.m)});
      auto len = static_cast<VertexId>(2 + rng.below(cap - 1));
      EdgeId base_count = spec.m > len ? spec.m - len : 0;
      Graph base = negfree(spec, rng, base_count);

      // Distinct cycle vertices via a partial shuffle.
      std::vector<VertexId> pool(spec.n);
      std::iota(pool.begin(), pool.end(), 0);
      for (VertexId i = 0; i < len; ++i) {
        auto j = i + static_cast<VertexId>(rng.below(spec.n - i));
        std::swap(pool[i], pool[j]);
      }
      std::vector<Weight> cw(len);
      Weight partial = 0;
      for (VertexId i = 0; i + 1 < len; ++i) {
        cw[i] = rng.range(spec.wmin, spec.wmax);
        partial += cw[i];
      }
      // Last weight must push the total below zero and stay in range.
      Weight hi = std::min(spec.wmax, -1 - partial);
      if (hi >= spec.wmin) {
        cw[len - 1] = rng.range(spec.wmin, hi);
      } else {
        for (VertexId i = 0; i < len; ++i) cw[i] = spec.wmin;
      }
      std::vector<Edge> edges = base.edges();
      for (VertexId i = 0; i < len; ++i)
        edges.push_back({pool[i], pool[(i + 1) % len], cw[i]});
      return Graph::build(spec.n, std::move(edges));
    }
  }
  throw InputError("gen: unknown mode");
}

GenMode gen_mode_from_name(const std::string& name) {
  if (name == "any") return GenMode::Any;
  if (name == "negative-free") return GenMode::NegativeFree;
  if (name == "planted-cycle") return GenMode::PlantedCycle;
  throw InputError("gen: unknown mode '" + name +
                   "' (any, negative-free, planted-cycle)");
}

const char* gen_mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::Any: return "any";
    case GenMode::NegativeFree: return "negative-free";
    case GenMode::PlantedCycle: return "planted-cycle";
  }
  return "?";
}

}  // namespace negsssp
