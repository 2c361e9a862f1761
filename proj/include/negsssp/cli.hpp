#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "negsssp/graph.hpp"

namespace negsssp {

// Subcommand runners behind the command-line tool.  They speak streams and
// return process exit codes, so tests can drive them without spawning the
// binary:
//   0  success (solve: shortest-path tree)
//   1  solve found a negative cycle / verify rejected the certificate
//   2  unusable input or arguments
//   3  internal failure

struct SolveCmd {
  std::string input;            // DIMACS file
  std::int64_t source = 1;      // 1-based
  std::uint64_t seed = 0;
  bool oracle_check = false;    // cross-check against the reference solver
  bool timings = false;         // append wall-clock time to the record
  std::string output;           // record target; empty = stdout
};
int run_solve(const SolveCmd& cmd, std::ostream& out, std::ostream& err);

struct GenCmd {
  std::string output;           // DIMACS target; empty = stdout
  std::int64_t n = 0;
  std::int64_t m = 0;
  Weight wmin = -8;
  Weight wmax = 32;
  std::string mode = "any";
  std::uint64_t seed = 0;
};
int run_gen(const GenCmd& cmd, std::ostream& out, std::ostream& err);

struct VerifyCmd {
  std::string graph;            // DIMACS file
  std::string record;           // solve record file
};
int run_verify(const VerifyCmd& cmd, std::ostream& out, std::ostream& err);

struct BenchCmd {
  std::int64_t n0 = 1024;
  int doublings = 4;
  std::int64_t avg_deg = 4;
  Weight wmin = -4;
  Weight wmax = 64;
  std::string mode = "negative-free";
  std::uint64_t seed = 0;
};
int run_bench(const BenchCmd& cmd, std::ostream& out, std::ostream& err);

struct DecompStatsCmd {
  std::string input;            // DIMACS file
  Weight d = 0;                 // radius parameter
  int trials = 1;
  int paths = 0;                // sampled paths per trial for cut-hit stats
  std::uint64_t seed = 0;
  std::string dot;              // DOT dump of the first trial; empty = none
};
int run_decomp_stats(const DecompStatsCmd& cmd, std::ostream& out,
                     std::ostream& err);

}  // namespace negsssp
