#pragma once

#include <iosfwd>
#include <string>

#include "negsssp/graph.hpp"

namespace negsssp {

// DIMACS shortest-path format:
//   c <comment>
//   p sp <num_vertices> <num_arcs>
//   a <src> <dst> <weight>       (vertex ids are 1-based)
// Arc ids follow file order, 1-based in all user-facing output.  Parse
// errors carry the line number; loaded graphs pass check_weight_bounds so
// the solver can rely on overflow-free arithmetic afterwards.
Graph load_dimacs(std::istream& in);
Graph load_dimacs_file(const std::string& path);

void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::string& path, const Graph& g);

}  // namespace negsssp
