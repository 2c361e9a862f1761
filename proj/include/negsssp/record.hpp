#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "negsssp/sssp.hpp"

namespace negsssp {

// Plain-text solve report, one key per line.  Vertex ids and arc ids are
// 1-based to match the DIMACS input.  Emission is byte-deterministic for a
// fixed (graph, source, seed); wall-clock time is only written when
// explicitly attached, so records stay comparable by default.
struct ResultRecord {
  SsspResult::Kind kind = SsspResult::Kind::Tree;
  VertexId n = 0;
  EdgeId m = 0;
  VertexId source = 0;  // 0-based internally, 1-based on the wire
  std::uint64_t seed = 0;
  // Tree payload.
  std::vector<Weight> dist;      // kInfWeight = unreachable
  std::vector<EdgeId> parent;    // kNoEdge = none
  // Cycle payload.
  std::vector<EdgeId> cycle;     // 0-based internally
  Weight total = 0;
  // Deterministic run counters.
  SolveStats stats;
  // Optional timing; excluded from the deterministic surface.
  std::optional<double> time_ms;

  static ResultRecord from_result(const Graph& g, const SsspResult& r,
                                  std::uint64_t seed, const SolveStats& st);

  void emit(std::ostream& out) const;
  static ResultRecord parse(std::istream& in);
};

}  // namespace negsssp
