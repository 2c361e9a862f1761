#pragma once

#include <string>

#include "negsssp/graph.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

enum class GenMode {
  // Independent uniform arcs and weights; negative cycles possible.
  Any,
  // Negative weights allowed, negative cycles excluded: arcs running
  // backward against a hidden vertex order keep nonnegative weights, and the
  // sample is re-drawn until a reference check confirms no negative cycle
  // (positive backward arcs can still close one through very negative
  // forward arcs).
  NegativeFree,
  // NegativeFree base plus an embedded cycle with negative total.
  PlantedCycle,
};

struct GenSpec {
  VertexId n = 0;
  EdgeId m = 0;
  Weight wmin = -8;
  Weight wmax = 32;
  GenMode mode = GenMode::Any;
};

// Deterministic for a fixed (spec, rng state).  Throws InputError when the
// spec is unsatisfiable (e.g. a planted cycle with wmin >= 0) or when
// NegativeFree re-drawing exhausts its cap.
Graph gen_random(const GenSpec& spec, Rng& rng);

// "any" / "negative-free" / "planted-cycle" <-> GenMode.
GenMode gen_mode_from_name(const std::string& name);
const char* gen_mode_name(GenMode mode);

}  // namespace negsssp
