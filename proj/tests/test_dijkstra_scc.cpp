#include "doctest.h"
#include "negsssp/dijkstra.hpp"
#include "negsssp/gen.hpp"
#include "negsssp/rng.hpp"
#include "negsssp/scc.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using namespace negsssp;
using negsssp::testing::brute_scc_rep;
using negsssp::testing::floyd_warshall;

namespace {

Graph random_graph(Rng& rng, VertexId n, EdgeId m, Weight lo, Weight hi,
                   GenMode mode = GenMode::Any) {
  GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.wmin = lo;
  spec.wmax = hi;
  spec.mode = mode;
  return gen_random(spec, rng);
}

}  // namespace

TEST_CASE("dijkstra agrees with all-pairs closure on random graphs") {
  Rng rng(1001);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<VertexId>(2 + rng.below(14));
    auto m = static_cast<EdgeId>(rng.below(3 * static_cast<std::uint64_t>(n)));
    Graph g = random_graph(rng, n, m, 0, 12);
    auto fw = floyd_warshall(g, raw_view(g));
    OpsCounter ops;
    for (VertexId s = 0; s < n; ++s) {
      VertexId src[1] = {s};
      DijkstraResult d = dijkstra(g, raw_view(g), src, {}, ops);
      for (VertexId v = 0; v < n; ++v) CHECK(d.dist[v] == fw.dist[s][v]);
      // Parent edges are tight and the path recomputes the distance.
      for (VertexId v = 0; v < n; ++v) {
        if (d.dist[v] == kInfWeight || v == s) continue;
        Weight total = 0;
        VertexId at = s;
        for (EdgeId e : dijkstra_path(g, d, v)) {
          CHECK(g.edge(e).src == at);
          at = g.edge(e).dst;
          total += g.edge(e).w;
        }
        CHECK(at == v);
        CHECK(total == d.dist[v]);
      }
    }
  }
}

TEST_CASE("dijkstra options: target, radius, member, reverse") {
  // 0 -> 1 -> 2 -> 3 chain with weights 2, 3, 4 and a shortcut 0 -> 2 (10).
  Graph g = Graph::build(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 2, 10}});
  OpsCounter ops;
  VertexId src[1] = {0};

  DijkstraOptions opt;
  opt.target = 2;
  DijkstraResult r = dijkstra(g, raw_view(g), src, opt, ops);
  CHECK(r.dist[2] == 5);
  CHECK(r.dist[3] == kInfWeight);  // stopped before settling 3

  opt = {};
  opt.radius = 5;
  r = dijkstra(g, raw_view(g), src, opt, ops);
  CHECK(r.dist[1] == 2);
  CHECK(r.dist[2] == 5);
  CHECK(r.dist[3] == kInfWeight);

  opt = {};
  std::vector<char> member = {1, 0, 1, 1};
  opt.member = member.data();
  r = dijkstra(g, raw_view(g), src, opt, ops);
  CHECK(r.dist[1] == kInfWeight);
  CHECK(r.dist[2] == 10);  // must use the shortcut
  CHECK(r.dist[3] == 14);

  opt = {};
  opt.reverse = true;
  VertexId sink[1] = {3};
  r = dijkstra(g, raw_view(g), sink, opt, ops);
  CHECK(r.dist[0] == 9);
  CHECK(r.dist[2] == 4);
  // Reverse path from 0 to the sink reads forward.
  Weight total = 0;
  VertexId at = 0;
  for (EdgeId e : dijkstra_path(g, r, 0, true)) {
    CHECK(g.edge(e).src == at);
    at = g.edge(e).dst;
    total += g.edge(e).w;
  }
  CHECK(at == 3);
  CHECK(total == 9);
}

TEST_CASE("dijkstra rejects negative weights at relax time") {
  Graph g = Graph::build(2, {{0, 1, -1}});
  OpsCounter ops;
  VertexId src[1] = {0};
  CHECK_THROWS_AS(dijkstra(g, raw_view(g), src, {}, ops), InternalError);
}

TEST_CASE("multi-source dijkstra takes the nearest seed") {
  Graph g = Graph::build(4, {{0, 2, 5}, {1, 2, 1}, {2, 3, 1}});
  OpsCounter ops;
  VertexId srcs[2] = {0, 1};
  DijkstraResult r = dijkstra(g, raw_view(g), srcs, {}, ops);
  CHECK(r.dist[2] == 1);
  CHECK(r.dist[3] == 2);
  CHECK(r.parent[0] == kNoEdge);
  CHECK(r.parent[1] == kNoEdge);
}

TEST_CASE("scc matches brute-force mutual reachability") {
  Rng rng(2002);
  for (int trial = 0; trial < 80; ++trial) {
    auto n = static_cast<VertexId>(1 + rng.below(12));
    auto m = static_cast<EdgeId>(rng.below(3 * static_cast<std::uint64_t>(n)));
    Graph g = random_graph(rng, n, m, -5, 5);

    // Random vertex subset and random excluded edges.
    std::vector<VertexId> verts;
    for (VertexId v = 0; v < n; ++v)
      if (rng.below(4) != 0) verts.push_back(v);
    std::vector<char> excl(std::max<EdgeId>(g.num_edges(), 1), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) excl[e] = rng.below(5) == 0;

    SccResult got = scc(g, verts, excl.data());
    std::vector<VertexId> want = brute_scc_rep(g, verts, excl.data());

    // Same partition: representative of got's component == brute rep.
    std::vector<VertexId> got_rep(n, kNoVertex);
    for (const auto& comp : got.components)
      for (VertexId v : comp) got_rep[v] = comp.front();  // ascending => min
    CHECK(got_rep == want);

    // comp_of is consistent and -1 exactly off the subset.
    std::vector<char> in(n, 0);
    for (VertexId v : verts) in[v] = 1;
    for (VertexId v = 0; v < n; ++v) {
      if (!in[v]) {
        CHECK(got.comp_of[v] == -1);
      } else {
        REQUIRE(got.comp_of[v] >= 0);
        const auto& comp = got.components[got.comp_of[v]];
        CHECK(std::binary_search(comp.begin(), comp.end(), v));
      }
    }

    // Topological order of the condensation.
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (excl[e]) continue;
      const Edge& ed = g.edge(e);
      if (!in[ed.src] || !in[ed.dst]) continue;
      CHECK(got.comp_of[ed.src] <= got.comp_of[ed.dst]);
    }
  }
}
