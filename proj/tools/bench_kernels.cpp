// Compares the parallel ball-classification kernel against the serial
// reference on random graphs and checks that their answers agree.

#include <chrono>
#include <iostream>
#include <numeric>
#include <vector>

#include "CLI11.hpp"
#include "negsssp/ball_kernel.hpp"
#include "negsssp/gen.hpp"
#include "negsssp/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace negsssp;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ball classification kernel benchmark"};
  std::int64_t n0 = 2000;
  int doublings = 2;
  int avg_deg = 8;
  Weight d = 64;
  std::uint64_t seed = 1;
  app.add_option("--n0", n0, "smallest vertex count");
  app.add_option("--doublings", doublings, "number of doublings");
  app.add_option("--avg-deg", avg_deg, "edges per vertex");
  app.add_option("--d", d, "diameter parameter (balls use radius d/4)");
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

#if defined(_OPENMP)
  std::cout << "openmp threads: " << omp_get_max_threads() << '\n';
#else
  std::cout << "openmp: disabled at build time\n";
#endif
  std::cout << "n m kernel_ms reference_ms speedup kernel_ops reference_ops\n";

  Rng base(seed);
  for (int i = 0; i <= doublings; ++i) {
    std::int64_t n = n0 << i;
    GenSpec spec;
    spec.n = static_cast<VertexId>(n);
    spec.m = static_cast<EdgeId>(n * avg_deg);
    spec.wmin = 0;
    spec.wmax = 16;
    spec.mode = GenMode::Any;
    Rng rng = base.child(static_cast<std::uint64_t>(i));
    Graph g = gen_random(spec, rng);

    std::vector<VertexId> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    LocalGraph lg = LocalGraph::build(g, raw_view(g), all);

    OpsCounter kops, rops;
    auto t0 = std::chrono::steady_clock::now();
    BallLabels fast = classify_balls_exact(lg, all, d, all, kops);
    double fast_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    BallLabels ref = classify_balls_reference(lg, all, d, all, rops);
    double ref_ms = ms_since(t0);

    for (VertexId v = 0; v < lg.n; ++v) {
      if (fast.out_heavy[v] != ref.out_heavy[v] ||
          fast.in_heavy[v] != ref.in_heavy[v]) {
        std::cerr << "label mismatch at local vertex " << v << " (n=" << n
                  << ")\n";
        return 3;
      }
    }
    std::cout << n << ' ' << spec.m << ' ' << fast_ms << ' ' << ref_ms << ' '
              << (fast_ms > 0 ? ref_ms / fast_ms : 0.0) << ' ' << kops.total()
              << ' ' << rops.total() << '\n';
  }
  std::cout << "labels agree on all sizes\n";
  return 0;
}
