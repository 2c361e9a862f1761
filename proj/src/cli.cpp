#include "negsssp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "negsssp/decompose.hpp"
#include "negsssp/dijkstra.hpp"
#include "negsssp/dimacs.hpp"
#include "negsssp/gen.hpp"
#include "negsssp/oracle.hpp"
#include "negsssp/record.hpp"
#include "negsssp/scc.hpp"
#include "negsssp/sssp.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace negsssp {

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

void cross_check(const Graph& g, const SsspResult& r) {
  OpsCounter ops;
  auto cyc = oracle_negative_cycle(g, raw_view(g), ops);
  if (r.kind == SsspResult::Kind::Cycle) {
    if (!cyc.has_value())
      throw InternalError(
          "oracle check: solver reported a cycle, reference finds none");
    return;
  }
  if (cyc.has_value())
    throw InternalError(
        "oracle check: reference finds a negative cycle, solver returned a "
        "tree");
  OracleSssp o = oracle_bellman_ford(g, raw_view(g), r.source, ops);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (o.dist[v] != r.dist[v])
      throw InternalError("oracle check: distance mismatch at vertex " +
                          std::to_string(v + 1));
}

std::ostream& pick_sink(const std::string& path, std::ofstream& file,
                        std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw InputError("cannot open '" + path + "' for writing");
  return file;
}

}  // namespace

int run_solve(const SolveCmd& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    Graph g = load_dimacs_file(cmd.input);
    if (cmd.source < 1 || cmd.source > g.num_vertices())
      throw InputError("source " + std::to_string(cmd.source) +
                       " out of range 1.." +
                       std::to_string(g.num_vertices()));
    SolveConfig cfg;
    cfg.seed = cmd.seed;
    SolveStats st;
    auto t0 = std::chrono::steady_clock::now();
    SsspResult r = sssp(g, static_cast<VertexId>(cmd.source - 1), cfg, &st);
    double ms = elapsed_ms(t0);
    if (cmd.oracle_check) cross_check(g, r);

    ResultRecord rec = ResultRecord::from_result(g, r, cmd.seed, st);
    if (cmd.timings) rec.time_ms = ms;
    std::ofstream file;
    rec.emit(pick_sink(cmd.output, file, out));
    return r.kind == SsspResult::Kind::Tree ? 0 : 1;
  });
}

int run_gen(const GenCmd& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (cmd.n < 0 || cmd.n > std::numeric_limits<VertexId>::max())
      throw InputError("n out of range");
    if (cmd.m < 0 || cmd.m > std::numeric_limits<EdgeId>::max())
      throw InputError("m out of range");
    GenSpec spec;
    spec.n = static_cast<VertexId>(cmd.n);
    spec.m = static_cast<EdgeId>(cmd.m);
    spec.wmin = cmd.wmin;
    spec.wmax = cmd.wmax;
    spec.mode = gen_mode_from_name(cmd.mode);
    Rng rng(cmd.seed);
    Graph g = gen_random(spec, rng);
    check_weight_bounds(g);
    std::ofstream file;
    write_dimacs(pick_sink(cmd.output, file, out), g);
    return 0;
  });
}

int run_verify(const VerifyCmd& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    Graph g = load_dimacs_file(cmd.graph);
    std::ifstream rf(cmd.record);
    if (!rf) throw InputError("cannot open '" + cmd.record + "'");
    ResultRecord rec = ResultRecord::parse(rf);
    auto reject = [&](const std::string& why) {
      out << "invalid: " << why << '\n';
      return 1;
    };
    if (rec.n != g.num_vertices() || rec.m != g.num_edges())
      return reject("record was made for a different graph size");
    std::string why;
    if (rec.kind == SsspResult::Kind::Tree) {
      if (!verify_tree(g, rec.source, rec.dist, rec.parent, &why))
        return reject(why);
      out << "valid tree certificate\n";
    } else {
      if (!verify_cycle(g, rec.cycle, &why)) return reject(why);
      Weight total = 0;
      for (EdgeId e : rec.cycle) total += g.edge(e).w;
      if (total != rec.total) return reject("recorded total disagrees");
      out << "valid cycle certificate\n";
    }
    return 0;
  });
}

int run_bench(const BenchCmd& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (cmd.n0 < 2 || cmd.doublings < 0 || cmd.avg_deg < 0)
      throw InputError("bench: bad size parameters");
    out << "n m ops time_ms ops_ratio\n";
    std::uint64_t prev_ops = 0;
    Rng base(cmd.seed);
    for (int i = 0; i <= cmd.doublings; ++i) {
      std::int64_t n = cmd.n0 << i;
      if (n > std::numeric_limits<VertexId>::max())
        throw InputError("bench: size overflows vertex ids");
      GenSpec spec;
      spec.n = static_cast<VertexId>(n);
      spec.m = static_cast<EdgeId>(
          std::min<std::int64_t>(n * cmd.avg_deg,
                                 std::numeric_limits<EdgeId>::max()));
      spec.wmin = cmd.wmin;
      spec.wmax = cmd.wmax;
      spec.mode = gen_mode_from_name(cmd.mode);
      Rng grng = base.child(static_cast<std::uint64_t>(i));
      Graph g = gen_random(spec, grng);
      SolveConfig cfg;
      cfg.seed = base.child(1000 + static_cast<std::uint64_t>(i)).seed();
      SolveStats st;
      auto t0 = std::chrono::steady_clock::now();
      SsspResult r = sssp(g, 0, cfg, &st);
      double ms = elapsed_ms(t0);
      out << n << ' ' << spec.m << ' ' << st.ops << ' ';
      out << ms << ' ';
      if (prev_ops == 0)
        out << '-';
      else
        out << static_cast<double>(st.ops) / static_cast<double>(prev_ops);
      if (r.kind == SsspResult::Kind::Cycle) out << " (cycle)";
      out << '\n';
      prev_ops = st.ops;
    }
    return 0;
  });
}

namespace {

void write_decomp_dot(const std::string& path, const Graph& g,
                      const EdgeCut& cut) {
  std::ofstream dot(path);
  if (!dot) throw InputError("cannot open '" + path + "' for writing");
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  std::vector<char> cut_mask(g.num_edges(), 0);
  for (EdgeId e : cut) cut_mask[e] = 1;
  SccResult comps = scc(g, all, cut_mask.data());
  dot << "digraph decomposition {\n";
  for (std::size_t c = 0; c < comps.components.size(); ++c) {
    dot << "  subgraph cluster_" << c << " {\n";
    for (VertexId v : comps.components[c]) dot << "    v" << v + 1 << ";\n";
    dot << "  }\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    dot << "  v" << ed.src + 1 << " -> v" << ed.dst + 1 << " [label=\""
        << ed.w << "\"";
    if (cut_mask[e]) dot << ", style=dashed, color=red";
    dot << "];\n";
  }
  dot << "}\n";
}

}  // namespace

int run_decomp_stats(const DecompStatsCmd& cmd, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&]() -> int {
    Graph g = load_dimacs_file(cmd.input);
    if (cmd.d < 0) throw InputError("decomp-stats: d must be >= 0");
    if (cmd.trials < 1) throw InputError("decomp-stats: trials must be >= 1");
    if (cmd.paths < 0) throw InputError("decomp-stats: paths must be >= 0");
    const VertexId n = g.num_vertices();
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), 0);
    WeightView w = raw_view(g);
    WeightView w0 = nonneg_view(w);
    Rng base(cmd.seed);

    struct Trial {
      EdgeCut cut;
      std::uint64_t retries = 0;
      std::int64_t paths = 0;
      std::int64_t hits = 0;
      std::int64_t hit_max = 0;
    };
    std::vector<Trial> trials(cmd.trials);

    // Trials are independent; each derives its own random stream, so the
    // schedule cannot change any number reported below.
    auto run_trial = [&](int t) {
      Trial& tr = trials[t];
      Rng rng = base.child(static_cast<std::uint64_t>(t));
      OpsCounter ops;
      DecomposeStats ds;
      DecomposeConfig dcfg;
      tr.cut = decompose(g, w, all, cmd.d, rng, dcfg, ops, &ds);
      tr.retries = ds.retries;
      Rng prng = base.child(0x70617468u ^ static_cast<std::uint64_t>(t));
      for (int p = 0; n > 0 && p < cmd.paths; ++p) {
        auto s = static_cast<VertexId>(prng.below(n));
        auto d = static_cast<VertexId>(prng.below(n));
        DijkstraOptions opt;
        opt.target = d;
        VertexId src[1] = {s};
        DijkstraResult dr = dijkstra(g, w0, src, opt, ops);
        if (dr.dist[d] == kInfWeight) continue;
        std::int64_t hit = 0;
        for (EdgeId e : dijkstra_path(g, dr, d))
          if (std::binary_search(tr.cut.begin(), tr.cut.end(), e)) ++hit;
        ++tr.paths;
        tr.hits += hit;
        tr.hit_max = std::max(tr.hit_max, hit);
      }
    };

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < cmd.trials; ++t) run_trial(t);
#else
    for (int t = 0; t < cmd.trials; ++t) run_trial(t);
#endif

    std::uint64_t cut_sum = 0, cut_max = 0, retry_sum = 0;
    std::int64_t path_sum = 0, hit_sum = 0, hit_max = 0;
    for (const Trial& tr : trials) {
      cut_sum += tr.cut.size();
      cut_max = std::max<std::uint64_t>(cut_max, tr.cut.size());
      retry_sum += tr.retries;
      path_sum += tr.paths;
      hit_sum += tr.hits;
      hit_max = std::max(hit_max, tr.hit_max);
    }
    out << "decomp-stats n=" << n << " m=" << g.num_edges() << " d=" << cmd.d
        << " trials=" << cmd.trials << '\n';
    out << "cut_mean=" << static_cast<double>(cut_sum) / cmd.trials
        << " cut_max=" << cut_max
        << " retry_mean=" << static_cast<double>(retry_sum) / cmd.trials
        << '\n';
    if (cmd.paths > 0) {
      out << "paths=" << path_sum << " hit_mean="
          << (path_sum > 0 ? static_cast<double>(hit_sum) / path_sum : 0.0)
          << " hit_max=" << hit_max
          << " ref_8ln=" << 8.0 * std::log(std::max<double>(n, 2)) << '\n';
    }
    if (!cmd.dot.empty() && !trials.empty())
      write_decomp_dot(cmd.dot, g, trials[0].cut);
    return 0;
  });
}

}  // namespace negsssp
