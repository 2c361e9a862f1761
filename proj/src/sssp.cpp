#include "negsssp/sssp.hpp"

#include <algorithm>
#include <cmath>

#include "negsssp/dijkstra.hpp"

namespace negsssp {

std::uint64_t budget_window(VertexId n, EdgeId m, double constant) {
  double nn = std::max<double>(n, 2);
  double lg = std::log2(nn);
  double t = constant * (static_cast<double>(m) + nn * lg) * lg * lg;
  double window = 2.0 * t;
  if (window < 4096.0) window = 4096.0;
  if (window > 9e18) window = 9e18;
  return static_cast<std::uint64_t>(window);
}

namespace {

bool fail(std::string* reason, const char* msg) {
  if (reason != nullptr) *reason = msg;
  return false;
}

}  // namespace

bool verify_potential(const Graph& g, const Potential& phi, Weight bound,
                      std::string* reason) {
  if (static_cast<VertexId>(phi.size()) != g.num_vertices())
    return fail(reason, "potential size does not match the vertex count");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.w + phi[ed.src] - phi[ed.dst] < bound)
      return fail(reason, "an edge stays below the bound after reweighting");
  }
  return true;
}

bool verify_cycle(const Graph& g, const std::vector<EdgeId>& edges,
                  std::string* reason) {
  if (edges.empty()) return fail(reason, "cycle is empty");
  Weight total = 0;
  VertexId at = kNoVertex;
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges())
      return fail(reason, "cycle names an unknown edge");
    const Edge& ed = g.edge(e);
    if (at != kNoVertex && ed.src != at)
      return fail(reason, "cycle edges do not join up");
    at = ed.dst;
    total += ed.w;
  }
  if (g.edge(edges.front()).src != at)
    return fail(reason, "cycle does not close");
  if (total >= 0) return fail(reason, "cycle total is not negative");
  return true;
}

bool verify_tree(const Graph& g, VertexId source,
                 const std::vector<Weight>& dist,
                 const std::vector<EdgeId>& parent, std::string* reason) {
  const VertexId n = g.num_vertices();
  if (source < 0 || source >= n) return fail(reason, "source out of range");
  if (static_cast<VertexId>(dist.size()) != n ||
      static_cast<VertexId>(parent.size()) != n)
    return fail(reason, "dist/parent size does not match the vertex count");
  if (dist[source] != 0) return fail(reason, "source distance is not zero");
  if (parent[source] != kNoEdge) return fail(reason, "source has a parent");

  for (VertexId v = 0; v < n; ++v) {
    bool reached = dist[v] != kInfWeight;
    if (!reached) {
      if (parent[v] != kNoEdge)
        return fail(reason, "unreached vertex has a parent edge");
      continue;
    }
    if (v == source) continue;
    EdgeId e = parent[v];
    if (e < 0 || e >= g.num_edges())
      return fail(reason, "reached vertex lacks a valid parent edge");
    const Edge& ed = g.edge(e);
    if (ed.dst != v) return fail(reason, "parent edge does not enter vertex");
    if (dist[ed.src] == kInfWeight)
      return fail(reason, "parent tail is unreached");
    if (dist[v] != dist[ed.src] + ed.w)
      return fail(reason, "parent edge is not tight");
  }

  // Parent chains must reach the source without looping.
  std::vector<char> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  state[source] = 2;
  std::vector<VertexId> chain;
  for (VertexId v = 0; v < n; ++v) {
    if (dist[v] == kInfWeight || state[v] != 0) continue;
    chain.clear();
    VertexId at = v;
    while (state[at] == 0) {
      state[at] = 1;
      chain.push_back(at);
      at = g.edge(parent[at]).src;
    }
    if (state[at] == 1) return fail(reason, "parent chain loops");
    for (VertexId u : chain) state[u] = 2;
  }

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (dist[ed.src] == kInfWeight) continue;
    if (dist[ed.dst] == kInfWeight)
      return fail(reason, "edge from a reached to an unreached vertex");
    if (dist[ed.src] + ed.w < dist[ed.dst])
      return fail(reason, "an edge undercuts the claimed distance");
  }
  return true;
}

namespace {

bool check_cycle_outcome(const Graph& g, const Graph& ghp,
                         const NegCycleCertificate& c) {
  if (!verify_cycle(g, c.edges, nullptr)) return false;
  Weight total = 0;
  for (EdgeId e : c.edges) total += ghp.edge(e).w;
  return total == c.total;
}

SsspResult solve_once(const Graph& g, VertexId source, const SolveConfig& cfg,
                      SolveStats& st, int restart) {
  const VertexId n = g.num_vertices();
  const EdgeId m = g.num_edges();
  OpsCounter ops;
  const std::uint64_t window = budget_window(n, m, cfg.budget.constant);
  const Weight mult = 2 * static_cast<Weight>(n);

  std::vector<Weight> wh(m);
  for (EdgeId e = 0; e < m; ++e) wh[e] = g.edge(e).w * mult;
  Graph gh = g.with_weights(std::move(wh));
  ops.add(static_cast<std::uint64_t>(m) + 1);

  Weight w0 = 2;
  while (w0 < -gh.min_weight()) w0 *= 2;
  st.initial_w = w0;
  Potential phi(n, 0);
  std::int64_t round = 0;

  for (Weight W = w0; W >= 2; W /= 2, ++round) {
    std::vector<Weight> wr(m);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = gh.edge(e);
      wr[e] = ed.w + phi[ed.src] - phi[ed.dst];
    }
    Graph ghp = gh.with_weights(std::move(wr));
    ops.add(static_cast<std::uint64_t>(m) + 1);

    std::uint64_t salt =
        (static_cast<std::uint64_t>(restart) << 40) ^
        static_cast<std::uint64_t>(round);
    ScaleOutcome outcome = las_vegas_run(
        [&](Rng& rng, int attempt) -> std::optional<ScaleOutcome> {
          if (cfg.attempt_probe) cfg.attempt_probe(round, attempt);
          ScaleStats ss;
          ScaleOutcome out = scale(ghp, W, rng, cfg.scale, ops, &ss);
          st.bfd_iterations += ss.bfd_iterations;
          st.cycle_fallbacks += ss.cycle_fallbacks;
          st.decompose_calls += ss.decomp.calls;
          st.decompose_retries += ss.decomp.retries;
          if (out.kind == ScaleOutcome::Kind::Potential) {
            if (!verify_potential(ghp, out.phi, -(W / 2), nullptr))
              return std::nullopt;
          } else if (!check_cycle_outcome(g, ghp, out.cycle)) {
            return std::nullopt;
          }
          return out;
        },
        ops, window, cfg.seed, salt, cfg.budget.attempt_cap, &st.attempts);
    ++st.scale_rounds;

    if (outcome.kind == ScaleOutcome::Kind::Cycle) {
      SsspResult res;
      res.kind = SsspResult::Kind::Cycle;
      res.source = source;
      res.cycle.edges = std::move(outcome.cycle.edges);
      for (EdgeId e : res.cycle.edges) res.cycle.total += g.edge(e).w;
      st.ops = ops.total();
      return res;
    }
    for (VertexId v = 0; v < n; ++v) phi[v] += outcome.phi[v];
  }

  // All reweighted scaled weights are now >= -1; the +1 shift makes them
  // Dijkstra-safe, and on 2n-multiplied weights an extra +1 per edge is too
  // small to reorder paths (true totals differ by multiples of 2n, a simple
  // path has at most n-1 edges).
  WeightView finish{&gh, 1, phi.data(), false};
  VertexId src[1] = {source};
  DijkstraResult dr = dijkstra(gh, finish, src, DijkstraOptions{}, ops);

  SsspResult res;
  res.kind = SsspResult::Kind::Tree;
  res.source = source;
  res.dist.assign(n, kInfWeight);
  res.parent = dr.parent;
  res.dist[source] = 0;
  for (VertexId v : dr.order) {
    if (v == source) continue;
    EdgeId e = dr.parent[v];
    if (e == kNoEdge)
      throw InternalError("sssp: settled vertex without a parent edge");
    res.dist[v] = res.dist[g.edge(e).src] + g.edge(e).w;
  }
  std::string why;
  if (!verify_tree(g, source, res.dist, res.parent, &why))
    throw InternalError("sssp: tree verification failed: " + why);
  st.ops = ops.total();
  return res;
}

}  // namespace

SsspResult sssp(const Graph& g, VertexId source, const SolveConfig& cfg,
                SolveStats* stats) {
  if (source < 0 || source >= g.num_vertices())
    throw InputError("sssp: source out of range");
  check_weight_bounds(g);
  SolveStats local;
  SolveStats& st = stats != nullptr ? *stats : local;
  st = SolveStats{};

  for (int restart = 0;; ++restart) {
    try {
      return solve_once(g, source, cfg, st, restart);
    } catch (const InternalError&) {
      if (restart >= cfg.budget.restart_cap) throw;
      ++st.restarts;
    } catch (const ContractError&) {
      if (restart >= cfg.budget.restart_cap) throw;
      ++st.restarts;
    }
  }
}

}  // namespace negsssp
