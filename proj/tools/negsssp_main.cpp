#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "negsssp/cli.hpp"

namespace {

std::uint64_t default_seed() {
  const char* s = std::getenv("NEGSSSP_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == nullptr || *end != '\0') {
    std::cerr << "warning: ignoring unparsable NEGSSSP_SEED\n";
    return 0;
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negative-weight single-source shortest paths"};
  app.require_subcommand(1);
  std::uint64_t seed0 = default_seed();

  negsssp::SolveCmd solve;
  solve.seed = seed0;
  auto* s = app.add_subcommand("solve",
                               "solve one instance, print a result record");
  s->add_option("input", solve.input, "graph file (DIMACS sp format)")
      ->required();
  s->add_option("--source", solve.source, "source vertex, 1-based");
  s->add_option("--seed", solve.seed, "random seed");
  s->add_flag("--oracle-check", solve.oracle_check,
              "re-solve with Bellman-Ford and compare");
  s->add_flag("--timings", solve.timings, "include wall time in the record");
  s->add_option("-o,--output", solve.output, "write the record here");

  negsssp::GenCmd gen;
  gen.seed = seed0;
  auto* gcmd = app.add_subcommand("gen", "generate a random instance");
  gcmd->add_option("-o,--output", gen.output, "write the graph here");
  gcmd->add_option("--n", gen.n, "vertex count")->required();
  gcmd->add_option("--m", gen.m, "edge count")->required();
  gcmd->add_option("--wmin", gen.wmin, "minimum weight");
  gcmd->add_option("--wmax", gen.wmax, "maximum weight");
  gcmd->add_option("--mode", gen.mode,
                   "any | negative-free | planted-cycle");
  gcmd->add_option("--seed", gen.seed, "random seed");

  negsssp::VerifyCmd verify;
  auto* v = app.add_subcommand("verify", "check a result record");
  v->add_option("graph", verify.graph, "graph file")->required();
  v->add_option("record", verify.record, "record file")->required();

  negsssp::BenchCmd bench;
  bench.seed = seed0;
  auto* b = app.add_subcommand("bench", "operation-count scaling table");
  b->add_option("--n0", bench.n0, "smallest size");
  b->add_option("--doublings", bench.doublings, "number of doublings");
  b->add_option("--avg-deg", bench.avg_deg, "edges per vertex");
  b->add_option("--wmin", bench.wmin, "minimum weight");
  b->add_option("--wmax", bench.wmax, "maximum weight");
  b->add_option("--mode", bench.mode, "generator mode");
  b->add_option("--seed", bench.seed, "random seed");

  negsssp::DecompStatsCmd ds;
  ds.seed = seed0;
  auto* d = app.add_subcommand("decomp-stats",
                               "low-diameter decomposition statistics");
  d->add_option("input", ds.input, "graph file")->required();
  d->add_option("--d", ds.d, "diameter parameter")->required();
  d->add_option("--trials", ds.trials, "independent decompositions");
  d->add_option("--paths", ds.paths, "sampled shortest paths per trial");
  d->add_option("--seed", ds.seed, "random seed");
  d->add_option("--dot", ds.dot, "write the first trial as graphviz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  if (s->parsed()) return negsssp::run_solve(solve, std::cout, std::cerr);
  if (gcmd->parsed()) return negsssp::run_gen(gen, std::cout, std::cerr);
  if (v->parsed()) return negsssp::run_verify(verify, std::cout, std::cerr);
  if (b->parsed()) return negsssp::run_bench(bench, std::cout, std::cerr);
  if (d->parsed())
    return negsssp::run_decomp_stats(ds, std::cout, std::cerr);
  return 2;
}
