#include "negsssp/ball_kernel.hpp"

#include <algorithm>
#include <queue>

#include "negsssp/dijkstra.hpp"
#include "negsssp/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace negsssp {

LocalGraph LocalGraph::build(const Graph& g, const WeightView& w,
                             std::span<const VertexId> verts) {
  LocalGraph lg;
  lg.n = static_cast<VertexId>(verts.size());
  lg.global.assign(verts.begin(), verts.end());
  std::vector<VertexId> local_of(g.num_vertices(), kNoVertex);
  for (VertexId i = 0; i < lg.n; ++i) local_of[lg.global[i]] = i;

  lg.out_start.assign(lg.n + 1, 0);
  lg.in_start.assign(lg.n + 1, 0);
  for (VertexId i = 0; i < lg.n; ++i) {
    for (EdgeId e : g.out_edges(lg.global[i])) {
      VertexId j = local_of[g.edge(e).dst];
      if (j == kNoVertex) continue;
      ++lg.out_start[i + 1];
      ++lg.in_start[j + 1];
    }
  }
  for (VertexId i = 0; i < lg.n; ++i) {
    lg.out_start[i + 1] += lg.out_start[i];
    lg.in_start[i + 1] += lg.in_start[i];
  }
  lg.out_arcs.resize(lg.out_start[lg.n]);
  lg.in_arcs.resize(lg.in_start[lg.n]);
  std::vector<std::int32_t> op(lg.out_start.begin(), lg.out_start.end() - 1);
  std::vector<std::int32_t> ip(lg.in_start.begin(), lg.in_start.end() - 1);
  for (VertexId i = 0; i < lg.n; ++i) {
    for (EdgeId e : g.out_edges(lg.global[i])) {
      VertexId j = local_of[g.edge(e).dst];
      if (j == kNoVertex) continue;
      Weight we = w(e);
      if (we < 0) we = 0;
      lg.out_arcs[op[i]++] = {j, we, e};
      lg.in_arcs[ip[j]++] = {i, we, e};
    }
  }
  return lg;
}

std::uint64_t capped_ball(const LocalGraph& lg, VertexId src, bool inward,
                          Weight limit4, std::int64_t settle_cap,
                          const char* active, BallScratch& scratch,
                          std::vector<std::pair<VertexId, Weight>>& out) {
  scratch.reset(lg.n);
  ++scratch.cur;
  std::uint64_t spent = 0;

  struct Entry {
    Weight d;
    VertexId v;
    bool operator>(const Entry& o) const {
      return d != o.d ? d > o.d : v > o.v;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  auto dist_of = [&](VertexId v) -> Weight {
    return scratch.stamp[v] == scratch.cur ? scratch.dist[v] : kInfWeight;
  };

  scratch.stamp[src] = scratch.cur;
  scratch.dist[src] = 0;
  heap.push({0, src});
  ++spent;
  std::int64_t settled = 0;
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    ++spent;
    if (d != dist_of(u)) continue;
    if (4 * d > limit4) break;
    out.push_back({u, d});
    ++settled;
    if (settle_cap >= 0 && settled > settle_cap) break;
    auto arcs = inward ? lg.in(u) : lg.out(u);
    for (const auto& a : arcs) {
      if (active != nullptr && !active[a.to]) continue;
      ++spent;
      Weight nd = d + a.w;
      if (nd < dist_of(a.to)) {
        scratch.stamp[a.to] = scratch.cur;
        scratch.dist[a.to] = nd;
        heap.push({nd, a.to});
        ++spent;
      }
    }
  }
  // Entries already popped count as settled even when the cap cut the run
  // short; callers only compare settled counts against thresholds, and both
  // stop rules only ever under-report the true ball.
  return spent;
}

namespace {

constexpr int kMaxPivotRounds = 6;
constexpr int kEstimatorSamples = 96;

// Shared classification driver.  `allow_estimate` selects the production
// fallback above the exact cutoff.
BallLabels classify_impl(const LocalGraph& lg,
                         std::span<const VertexId> active_list, Weight d,
                         std::span<const VertexId> queries, bool allow_estimate,
                         std::uint64_t salt, bool parallel, OpsCounter& ops) {
  enum : char { kUnknown = 0, kHeavy = 1, kLight = 2 };
  VertexId n_a = static_cast<VertexId>(active_list.size());
  std::vector<char> out_state(lg.n, kUnknown), in_state(lg.n, kUnknown);
  std::vector<char> active;
  const char* active_ptr = nullptr;
  if (n_a != lg.n) {
    active.assign(lg.n, 0);
    for (VertexId v : active_list) active[v] = 1;
    active_ptr = active.data();
  }
  // heavy <=> 2 * |ball| > n_a
  auto is_heavy = [n_a](std::int64_t count) { return 2 * count > n_a; };
  std::int64_t settle_cap = n_a / 2;  // early exit once count > n_a / 2

  std::uint64_t spent = 0;
  std::vector<std::pair<VertexId, Weight>> buf;
  BallScratch scratch;

  // Pivot rounds.  Each round computes the exact distance-map pair around
  // one pivot out to radius d/2 and turns it into sound one-sided bounds on
  // every queried vertex's d/4 ball:
  //   heavy:  any u with dist(c,u) <= d/4 - dist(v,c) lies in B_out(v,d/4)
  //           via the pivot, so a big enough count proves heaviness;
  //   light:  u in B_out(v,d/4) forces dist(u,c) >= dist(v,c) - d/4, so
  //           vertices below that line are provably outside and the rest
  //           bound the ball size from above.
  // Settling order is distance order, so the map values come out sorted and
  // both counts are binary searches.  Vertices the rounds cannot settle are
  // handled by the fallback below.
  std::vector<Weight> dout(lg.n, kInfWeight), din(lg.n, kInfWeight);
  std::vector<Weight> out_sorted, in_sorted;
  {
    auto cnt_le4 = [](const std::vector<Weight>& s,
                      Weight lim4) -> std::int64_t {
      if (lim4 < 0) return 0;
      return std::upper_bound(s.begin(), s.end(), lim4 / 4) - s.begin();
    };
    std::size_t probe = 0;
    auto last_unknown = static_cast<std::int64_t>(queries.size());
    for (int round = 0; round < kMaxPivotRounds; ++round) {
      while (probe < queries.size() &&
             out_state[queries[probe]] != kUnknown &&
             in_state[queries[probe]] != kUnknown)
        ++probe;
      if (probe == queries.size()) break;
      VertexId c = queries[probe];

      buf.clear();
      spent += capped_ball(lg, c, false, 2 * d, -1, active_ptr, scratch, buf);
      out_sorted.clear();
      for (auto& [v, dv] : buf) {
        dout[v] = dv;
        out_sorted.push_back(dv);
      }
      std::vector<std::pair<VertexId, Weight>> out_ball;
      out_ball.swap(buf);
      spent += capped_ball(lg, c, true, 2 * d, -1, active_ptr, scratch, buf);
      in_sorted.clear();
      for (auto& [v, dv] : buf) {
        din[v] = dv;
        in_sorted.push_back(dv);
      }
      // The pivot itself is settled to d/2 > d/4 in both maps: exact labels.
      out_state[c] = is_heavy(cnt_le4(out_sorted, d)) ? kHeavy : kLight;
      in_state[c] = is_heavy(cnt_le4(in_sorted, d)) ? kHeavy : kLight;

      // One direction of one vertex; `vc` is the distance between v and the
      // pivot against the ball's growth direction, `grow` the sorted map in
      // the growth direction and `shrink` its counterpart.
      auto try_certify = [&](char& state, Weight vc,
                             const std::vector<Weight>& grow,
                             const std::vector<Weight>& shrink) {
        if (state != kUnknown) return;
        if (vc != kInfWeight && 4 * vc <= d &&
            is_heavy(cnt_le4(grow, d - 4 * vc))) {
          state = kHeavy;
          return;
        }
        Weight t4 = vc != kInfWeight ? 4 * vc - d : d + 1;
        std::int64_t outside = cnt_le4(shrink, t4 - 1);
        if (2 * (n_a - outside) <= n_a) state = kLight;
      };
      for (VertexId v : queries) {
        try_certify(out_state[v], din[v], out_sorted, in_sorted);
        try_certify(in_state[v], dout[v], in_sorted, out_sorted);
      }
      spent += out_sorted.size() + in_sorted.size() + 2 * queries.size() + 1;

      // Reset only what this round touched; the maps stay all-infinity
      // between rounds.
      for (auto& [v, dv] : out_ball) dout[v] = kInfWeight;
      for (auto& [v, dv] : buf) din[v] = kInfWeight;
      buf.clear();

      std::int64_t unknown = 0;
      for (VertexId v : queries)
        if (out_state[v] == kUnknown || in_state[v] == kUnknown) ++unknown;
      if (unknown == 0) break;
      if (unknown * 10 > last_unknown * 7) break;  // certification stalled
      last_unknown = unknown;
    }
  }

  std::vector<VertexId> suspects;
  for (VertexId v : queries)
    if (out_state[v] == kUnknown || in_state[v] == kUnknown)
      suspects.push_back(v);

  if (!suspects.empty() && allow_estimate && n_a > kClassifyExactCutoff) {
    // Sampled estimates for everything still open.  A sampled center s lies
    // in B_out(v,d/4) exactly when v lies in B_in(s,d/4), so 2k capped runs
    // from the samples estimate every remaining ball size at once.  The
    // labels follow the same strict half-region rule applied to the hit
    // counts; only vertices whose true ball sits near n_a/2 can disagree
    // with the exact kernel, and decompose tolerates either label there.
    std::vector<std::uint16_t> hits_out(lg.n, 0), hits_in(lg.n, 0);
    Rng srng(salt ^ 0x5eedba11c0135e1ULL);
    for (int j = 0; j < kEstimatorSamples; ++j) {
      VertexId s = active_list[srng.below(n_a)];
      buf.clear();
      spent += capped_ball(lg, s, true, d, -1, active_ptr, scratch, buf);
      for (auto& [v, dv] : buf) ++hits_out[v];
      buf.clear();
      spent += capped_ball(lg, s, false, d, -1, active_ptr, scratch, buf);
      for (auto& [v, dv] : buf) ++hits_in[v];
    }
    for (VertexId v : suspects) {
      if (out_state[v] == kUnknown)
        out_state[v] = 2 * hits_out[v] > kEstimatorSamples ? kHeavy : kLight;
      if (in_state[v] == kUnknown)
        in_state[v] = 2 * hits_in[v] > kEstimatorSamples ? kHeavy : kLight;
    }
    spent += 2 * suspects.size();
    suspects.clear();
  }

  auto classify_one = [&](VertexId v, BallScratch& sc,
                          std::vector<std::pair<VertexId, Weight>>& b)
      -> std::uint64_t {
    std::uint64_t local = 0;
    if (out_state[v] == kUnknown) {
      b.clear();
      local += capped_ball(lg, v, false, d, settle_cap, active_ptr, sc, b);
      out_state[v] =
          is_heavy(static_cast<std::int64_t>(b.size())) ? kHeavy : kLight;
    }
    if (in_state[v] == kUnknown) {
      b.clear();
      local += capped_ball(lg, v, true, d, settle_cap, active_ptr, sc, b);
      in_state[v] =
          is_heavy(static_cast<std::int64_t>(b.size())) ? kHeavy : kLight;
    }
    return local;
  };

#if defined(_OPENMP)
  if (parallel && suspects.size() >= 32) {
    std::uint64_t batch = 0;
#pragma omp parallel
    {
      BallScratch sc;
      std::vector<std::pair<VertexId, Weight>> b;
      std::uint64_t mine = 0;
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(suspects.size());
           ++i)
        mine += classify_one(suspects[i], sc, b);
#pragma omp atomic
      batch += mine;
    }
    spent += batch;
  } else
#endif
  {
    (void)parallel;
    for (VertexId v : suspects) spent += classify_one(v, scratch, buf);
  }
  ops.add(spent);

  BallLabels labels;
  labels.out_heavy.assign(lg.n, 0);
  labels.in_heavy.assign(lg.n, 0);
  for (VertexId v = 0; v < lg.n; ++v) {
    labels.out_heavy[v] = out_state[v] == kHeavy;
    labels.in_heavy[v] = in_state[v] == kHeavy;
  }
  return labels;
}

}  // namespace

BallLabels classify_balls(const LocalGraph& lg,
                          std::span<const VertexId> active_list, Weight d,
                          std::span<const VertexId> queries, OpsCounter& ops,
                          std::uint64_t salt) {
  return classify_impl(lg, active_list, d, queries, true, salt, true, ops);
}

BallLabels classify_balls_exact(const LocalGraph& lg,
                                std::span<const VertexId> active_list, Weight d,
                                std::span<const VertexId> queries,
                                OpsCounter& ops) {
  return classify_impl(lg, active_list, d, queries, false, 0, true, ops);
}

BallLabels classify_balls_reference(const LocalGraph& lg,
                                    std::span<const VertexId> active_list,
                                    Weight d, std::span<const VertexId> queries,
                                    OpsCounter& ops) {
  // Deliberately plain: no certification, no early exit, no threads.
  enum : char { kHeavy = 1 };
  VertexId n_a = static_cast<VertexId>(active_list.size());
  std::vector<char> active;
  const char* active_ptr = nullptr;
  if (n_a != lg.n) {
    active.assign(lg.n, 0);
    for (VertexId v : active_list) active[v] = 1;
    active_ptr = active.data();
  }
  BallLabels labels;
  labels.out_heavy.assign(lg.n, 0);
  labels.in_heavy.assign(lg.n, 0);
  BallScratch scratch;
  std::vector<std::pair<VertexId, Weight>> buf;
  std::uint64_t spent = 0;
  for (VertexId v : queries) {
    buf.clear();
    spent += capped_ball(lg, v, false, d, -1, active_ptr, scratch, buf);
    labels.out_heavy[v] = 2 * static_cast<std::int64_t>(buf.size()) > n_a;
    buf.clear();
    spent += capped_ball(lg, v, true, d, -1, active_ptr, scratch, buf);
    labels.in_heavy[v] = 2 * static_cast<std::int64_t>(buf.size()) > n_a;
  }
  ops.add(spent);
  return labels;
}

std::vector<VertexId> ball(const Graph& g, const WeightView& w, BallQuery q,
                           OpsCounter& ops) {
  DijkstraOptions opt;
  opt.radius = q.radius;
  opt.reverse = q.inward;
  VertexId src[1] = {q.center};
  DijkstraResult r = dijkstra(g, w, src, opt, ops);
  std::vector<VertexId> out = r.order;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace negsssp
