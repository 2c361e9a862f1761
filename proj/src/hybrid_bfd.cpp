#include "negsssp/hybrid_bfd.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace negsssp {

std::int64_t BfdResult::rank_of(VertexId v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return -1;
  return it - members.begin();
}

namespace {

struct NegEdge {
  std::int32_t src, dst;  // member ranks
  Weight w, aux;
  EdgeId id;
};

struct NonnegArc {
  std::int32_t dst;
  Weight w, aux;
  EdgeId id;
};

}  // namespace

BfdResult bellman_ford_dijkstra(const Graph& g, const WeightView& primary,
                                std::span<const VertexId> members,
                                const BfdConfig& cfg, OpsCounter& ops) {
  const auto k = static_cast<std::int64_t>(members.size());
  for (std::int64_t i = 0; i + 1 < k; ++i)
    if (members[i] >= members[i + 1])
      throw InputError("bfd: members must be ascending and unique");
  if (k > 0 && (members[0] < 0 || members[k - 1] >= g.num_vertices()))
    throw InputError("bfd: member id out of range");

  BfdResult res;
  res.members.assign(members.begin(), members.end());
  res.d.assign(k, 0);
  res.aux.assign(k, 0);
  res.cur.resize(k);
  res.pool.reserve(2 * k);
  for (std::int32_t i = 0; i < k; ++i) {
    res.pool.push_back({members[i], 0, 0, kNoEdge, -1});
    res.cur[i] = i;
  }

  // Split the restricted edge set by sign of the primary weight.
  std::vector<NegEdge> neg;
  std::vector<NonnegArc> arcs;
  std::vector<std::int32_t> arc_start(k + 1, 0);
  std::uint64_t spent = k + 1;
  for (std::int32_t i = 0; i < k; ++i) {
    arc_start[i] = static_cast<std::int32_t>(arcs.size());
    for (EdgeId e : g.out_edges(members[i])) {
      ++spent;
      std::int64_t j = res.rank_of(g.edge(e).dst);
      if (j < 0) continue;
      Weight w = primary(e);
      Weight aw = cfg.aux != nullptr ? (*cfg.aux)(e) : 0;
      if (w < 0)
        neg.push_back({i, static_cast<std::int32_t>(j), w, aw, e});
      else
        arcs.push_back({static_cast<std::int32_t>(j), w, aw, e});
    }
  }
  arc_start[k] = static_cast<std::int32_t>(arcs.size());
  // Relaxation candidates are considered in ascending edge id, which decides
  // ties between equal-value paths.
  std::sort(neg.begin(), neg.end(),
            [](const NegEdge& a, const NegEdge& b) { return a.id < b.id; });
  ops.add(spent);
  const bool has_neg = !neg.empty();

  std::int64_t max_iters = cfg.max_iters;
  if (max_iters < 0)
    max_iters = cfg.threshold.has_value()
                    ? std::numeric_limits<std::int64_t>::max()
                    : k + 1;

  struct HeapEntry {
    Weight d;
    std::int32_t v;
    bool operator>(const HeapEntry& o) const {
      return d != o.d ? d > o.d : v > o.v;
    }
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;

  // Per-iteration scratch.
  std::vector<Weight> cand_d(k);
  std::vector<Weight> cand_aux(k);
  std::vector<EdgeId> cand_via(k);
  std::vector<std::int32_t> cand_pred(k);
  std::vector<char> has_cand(k, 0);
  std::vector<std::int32_t> frontier, updated;
  std::vector<char> updated_mark(k, 0);

  auto push_entry = [&res](std::int32_t rank, Weight nd, Weight na, EdgeId via,
                           std::int32_t pred) {
    res.pool.push_back({res.members[rank], nd, na, via, pred});
    res.cur[rank] = static_cast<std::int32_t>(res.pool.size()) - 1;
    res.d[rank] = nd;
    res.aux[rank] = na;
  };

  for (std::int64_t it = 1; it <= max_iters; ++it) {
    spent = 1;
    frontier.clear();
    updated.clear();

    if (it >= 2) {
      // One simultaneous relaxation round over the negative edges: every
      // candidate reads the pre-round state, then the winners are applied.
      for (const NegEdge& ne : neg) {
        ++spent;
        Weight nd = res.d[ne.src] + ne.w;
        if (nd >= res.d[ne.dst]) continue;
        if (!has_cand[ne.dst] || nd < cand_d[ne.dst]) {
          has_cand[ne.dst] = 1;
          cand_d[ne.dst] = nd;
          cand_aux[ne.dst] = res.aux[ne.src] + ne.aux;
          cand_via[ne.dst] = ne.id;
          cand_pred[ne.dst] = res.cur[ne.src];
          frontier.push_back(ne.dst);
        }
      }
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()),
                     frontier.end());
      for (std::int32_t t : frontier) {
        ++spent;
        push_entry(t, cand_d[t], cand_aux[t], cand_via[t], cand_pred[t]);
        has_cand[t] = 0;
        updated_mark[t] = 1;
        updated.push_back(t);
      }
    }

    // Dijkstra pass over the nonnegative edges, seeded from this round's
    // improvements (everything on the first iteration).  Vertices left
    // unseeded already satisfy their out-edges from the previous pass.
    if (it == 1) {
      for (std::int32_t i = 0; i < k; ++i) heap.push({res.d[i], i});
      spent += k;
    } else {
      for (std::int32_t t : frontier) heap.push({res.d[t], t});
      spent += frontier.size();
    }
    while (!heap.empty()) {
      auto [pd, u] = heap.top();
      heap.pop();
      ++spent;
      if (pd != res.d[u]) continue;
      for (std::int32_t a = arc_start[u]; a < arc_start[u + 1]; ++a) {
        ++spent;
        const NonnegArc& arc = arcs[a];
        Weight nd = pd + arc.w;
        if (nd < res.d[arc.dst]) {
          push_entry(arc.dst, nd, res.aux[u] + arc.aux, arc.id, res.cur[u]);
          heap.push({nd, arc.dst});
          ++spent;
          if (!updated_mark[arc.dst]) {
            updated_mark[arc.dst] = 1;
            updated.push_back(arc.dst);
          }
        }
      }
    }

    res.iterations = static_cast<int>(std::min<std::int64_t>(
        it, std::numeric_limits<int>::max()));
    if (cfg.checkpoint) cfg.checkpoint(res.iterations, res.d);

    std::sort(updated.begin(), updated.end());
    for (std::int32_t t : updated) updated_mark[t] = 0;
    if (cfg.threshold.has_value()) {
      for (std::int32_t t : updated) {
        ++spent;
        if (res.aux[t] > *cfg.threshold) {
          res.status = BfdStatus::Violated;
          res.violator = res.members[t];
          ops.add(spent);
          return res;
        }
      }
    }
    ops.add(spent);

    if (updated.empty() && (it > 1 || !has_neg)) {
      res.status = BfdStatus::Completed;
      return res;
    }
  }
  res.status = BfdStatus::IterationLimit;
  return res;
}

PathWitness recover_path(const Graph& g, const WeightView& primary,
                         const WeightView* aux, const BfdResult& r,
                         VertexId v) {
  std::int64_t rank = r.rank_of(v);
  if (rank < 0) throw InputError("recover_path: not a member vertex");
  PathWitness wit;
  wit.end = v;
  std::int32_t idx = r.cur[rank];
  while (idx >= 0) {
    const BfdResult::Entry& ent = r.pool[idx];
    if (ent.via == kNoEdge) {
      if (ent.pred != -1 || ent.d != 0 || ent.aux != 0)
        throw InternalError("recover_path: malformed initial entry");
      wit.start = ent.vertex;
      break;
    }
    if (ent.pred < 0 || ent.pred >= idx)
      throw InternalError("recover_path: witness chain not strictly older");
    const Edge& ed = g.edge(ent.via);
    if (ed.dst != ent.vertex || r.pool[ent.pred].vertex != ed.src)
      throw InternalError("recover_path: witness chain endpoints disagree");
    wit.edges.push_back(ent.via);
    idx = ent.pred;
  }
  std::reverse(wit.edges.begin(), wit.edges.end());
  VertexId at = wit.start;
  for (EdgeId e : wit.edges) {
    const Edge& ed = g.edge(e);
    if (ed.src != at) throw InternalError("recover_path: broken edge chain");
    at = ed.dst;
    wit.primary += primary(e);
    if (aux != nullptr) wit.aux += (*aux)(e);
  }
  if (at != v) throw InternalError("recover_path: chain misses the target");
  const BfdResult::Entry& top = r.pool[r.cur[rank]];
  if (wit.primary != top.d || wit.aux != top.aux)
    throw InternalError("recover_path: recomputed totals disagree");
  return wit;
}

}  // namespace negsssp
