#include "negsssp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "negsssp/scc.hpp"

namespace negsssp {

namespace {

// Carving state shared across the recursion.  `member` marks the vertices of
// the region currently being carved; every ball search and boundary scan is
// restricted to it.  Invariant around carve(): on entry member is 1 exactly
// on the region, on exit it is 0 there (so a parent can hand disjoint
// sub-regions to recursive calls one at a time).
struct Carver {
  const LocalGraph& lg;
  Weight d;
  double radius_constant;
  Rng& rng;
  OpsCounter& ops;
  std::uint64_t salt = 0;
  std::vector<char> member;
  std::vector<EdgeId> cut;  // base-graph edge ids, deduplicated by caller
  BallLabels top_labels;    // labels of the first, full-region classification
  bool have_top = false;
  BallScratch scratch;
  std::vector<std::pair<VertexId, Weight>> ball_buf;

  void carve(const std::vector<VertexId>& region);
};

void Carver::carve(const std::vector<VertexId>& region) {
  auto n_a = static_cast<VertexId>(region.size());
  if (n_a <= 1) {
    for (VertexId v : region) member[v] = 0;
    return;
  }
  BallLabels labels = classify_balls(lg, region, d, region, ops, salt);
  if (!have_top) {
    top_labels = labels;
    have_top = true;
  }
  double p = std::min(
      1.0, radius_constant * std::log(std::max<double>(n_a, 2.0)) /
               std::max<double>(d, 1.0));

  std::vector<std::vector<VertexId>> carved;
  std::uint64_t spent = 0;
  for (VertexId v : region) {
    if (!member[v]) continue;  // swallowed by an earlier ball
    bool out_light = !labels.out_heavy[v];
    bool in_light = !labels.in_heavy[v];
    if (!out_light && !in_light) continue;  // heavy both ways: core vertex
    bool inward = !out_light;               // prefer the out-ball carve
    std::int64_t r = rng.geometric(p);
    Weight r4 = r > d / 4 ? d : static_cast<Weight>(4 * r);
    ball_buf.clear();
    spent += capped_ball(lg, v, inward, r4, -1, member.data(), scratch,
                         ball_buf);
    std::vector<VertexId> sub;
    sub.reserve(ball_buf.size());
    for (auto& [u, du] : ball_buf) sub.push_back(u);
    std::sort(sub.begin(), sub.end());
    for (VertexId u : sub) member[u] = 0;
    // Every positive edge between the ball and the rest of the live region
    // is cut, against the ball's growth direction staying safe: leaving
    // edges for an out-ball, entering edges for an in-ball.  Zero-weight
    // edges in that direction cannot reach outside the ball (the search
    // would have absorbed the endpoint), so the w > 0 filter drops nothing
    // that matters and keeps the cut strictly positive.
    for (VertexId u : sub) {
      auto arcs = inward ? lg.in(u) : lg.out(u);
      spent += arcs.size();
      for (const auto& a : arcs)
        if (member[a.to] && a.w > 0) cut.push_back(a.id);
    }
    carved.push_back(std::move(sub));
  }
  ops.add(spent + 1);
  // Remaining members form the heavy core of this region; it is kept whole.
  for (VertexId v : region) member[v] = 0;
  for (const auto& sub : carved) {
    // A mislabeled seed can swallow the whole region in one ball; carving
    // the same region again could not terminate, so such a ball is kept as
    // one piece and the progress gate decides whether a retry is needed.
    if (sub.size() == region.size()) continue;
    for (VertexId u : sub) member[u] = 1;
    carve(sub);
  }
}

// Progress gate for regions too large for the exact verifier: cut sanity
// plus the component size rule, with oversize components accepted only when
// the carve's own full-region labels called every vertex heavy both ways.
// The check is consistent with the labels by construction, so a rejection
// means the carve itself went wrong (an estimator miss let a light seed
// swallow most of the region) and a retry with fresh randomness is the
// right response.
bool quick_progress_gate(const Graph& g, const WeightView& w,
                         std::span<const VertexId> verts, const EdgeCut& cut,
                         const BallLabels& labels,
                         const std::vector<VertexId>& local_of,
                         OpsCounter& ops) {
  auto n_h = static_cast<std::int64_t>(verts.size());
  std::vector<char> in_sub(g.num_vertices(), 0);
  for (VertexId v : verts) in_sub[v] = 1;
  std::vector<char> excluded(g.num_edges(), 0);
  for (EdgeId e : cut) {
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (!in_sub[ed.src] || !in_sub[ed.dst]) return false;
    if (w(e) <= 0) return false;
    excluded[e] = 1;
  }
  ops.add(verts.size() + cut.size() + 1);
  SccResult comps = scc(g, verts, excluded.data());
  ops.add(verts.size() + g.num_edges());
  for (const auto& comp : comps.components) {
    if (4 * static_cast<std::int64_t>(comp.size()) <= 3 * n_h) continue;
    for (VertexId v : comp) {
      VertexId lid = local_of[v];
      if (!labels.out_heavy[lid] || !labels.in_heavy[lid]) return false;
    }
  }
  return true;
}

}  // namespace

EdgeCut decompose(const Graph& g, const WeightView& w,
                  std::span<const VertexId> verts, Weight d, Rng& rng,
                  const DecomposeConfig& cfg, OpsCounter& ops,
                  DecomposeStats* stats) {
  if (d < 0) throw InputError("decompose: radius parameter must be >= 0");
  if (stats != nullptr) ++stats->calls;
  if (verts.size() <= 1) return {};

  LocalGraph lg = LocalGraph::build(g, w, verts);
  ops.add(verts.size() + lg.out_arcs.size() + 1);
  std::vector<VertexId> all(lg.n);
  std::iota(all.begin(), all.end(), 0);
  const bool exact_gate = lg.n <= kClassifyExactCutoff;
  std::vector<VertexId> local_of;
  if (!exact_gate) {
    local_of.assign(g.num_vertices(), kNoVertex);
    for (VertexId i = 0; i < lg.n; ++i) local_of[lg.global[i]] = i;
  }

  for (int attempt = 0; attempt < cfg.retry_cap; ++attempt) {
    Carver c{lg, d, cfg.radius_constant, rng, ops, 0, {}, {}, {}, false,
             {}, {}};
    c.salt = rng.next();
    c.member.assign(lg.n, 1);
    c.carve(all);
    std::sort(c.cut.begin(), c.cut.end());
    c.cut.erase(std::unique(c.cut.begin(), c.cut.end()), c.cut.end());
    bool ok = exact_gate
                  ? verify_progress(g, w, verts, d, c.cut, ops)
                  : quick_progress_gate(g, w, verts, c.cut, c.top_labels,
                                        local_of, ops);
    if (ok) {
      if (stats != nullptr) stats->cut_edges += c.cut.size();
      return std::move(c.cut);
    }
    if (stats != nullptr) ++stats->retries;
  }
  throw InternalError("decompose: no verified cut within retry budget");
}

bool verify_progress(const Graph& g, const WeightView& w,
                     std::span<const VertexId> verts, Weight d,
                     const EdgeCut& cut, OpsCounter& ops) {
  auto n_h = static_cast<std::int64_t>(verts.size());
  std::vector<char> in_sub(g.num_vertices(), 0);
  for (VertexId v : verts) in_sub[v] = 1;
  std::vector<char> excluded(g.num_edges(), 0);
  for (EdgeId e : cut) {
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (!in_sub[ed.src] || !in_sub[ed.dst]) return false;
    Weight we = w(e);
    if (we <= 0) return false;  // cuts must be strictly positive edges
    excluded[e] = 1;
  }
  ops.add(verts.size() + cut.size() + 1);

  SccResult comps = scc(g, verts, excluded.data());
  ops.add(verts.size() + g.num_edges());

  std::vector<VertexId> big;  // global ids of vertices in oversize components
  for (const auto& comp : comps.components)
    if (4 * static_cast<std::int64_t>(comp.size()) > 3 * n_h)
      big.insert(big.end(), comp.begin(), comp.end());
  if (big.empty()) return true;

  // Oversize components get a pass only if every vertex in them is heavy in
  // both directions with respect to the whole subgraph (cut edges included).
  LocalGraph lg = LocalGraph::build(g, w, verts);
  std::vector<VertexId> local_of(g.num_vertices(), kNoVertex);
  for (VertexId i = 0; i < lg.n; ++i) local_of[lg.global[i]] = i;
  std::vector<VertexId> queries;
  queries.reserve(big.size());
  for (VertexId v : big) queries.push_back(local_of[v]);
  std::sort(queries.begin(), queries.end());
  std::vector<VertexId> all(lg.n);
  std::iota(all.begin(), all.end(), 0);
  BallLabels labels = classify_balls_exact(lg, all, d, queries, ops);
  for (VertexId v : queries)
    if (!labels.out_heavy[v] || !labels.in_heavy[v]) return false;
  return true;
}

}  // namespace negsssp
