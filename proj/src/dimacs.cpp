#include "negsssp/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace negsssp {

namespace {

[[noreturn]] void bail(std::int64_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(const std::string& tok, std::int64_t line,
                       const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    bail(line, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

Graph load_dimacs(std::istream& in) {
  std::string raw;
  std::int64_t lineno = 0;
  bool have_p = false;
  VertexId n = 0;
  std::int64_t m_declared = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(std::move(t));
    if (tok.empty() || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_p) bail(lineno, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "sp")
        bail(lineno, "expected 'p sp <n> <m>'");
      std::int64_t nn = parse_int(tok[2], lineno, "vertex count");
      m_declared = parse_int(tok[3], lineno, "arc count");
      if (nn < 0 || nn > std::numeric_limits<VertexId>::max())
        bail(lineno, "vertex count out of range");
      if (m_declared < 0 || m_declared > std::numeric_limits<EdgeId>::max())
        bail(lineno, "arc count out of range");
      n = static_cast<VertexId>(nn);
      edges.reserve(static_cast<std::size_t>(m_declared));
      have_p = true;
      continue;
    }
    if (tok[0] == "a") {
      if (!have_p) bail(lineno, "arc before the problem line");
      if (tok.size() != 4) bail(lineno, "expected 'a <src> <dst> <weight>'");
      std::int64_t u = parse_int(tok[1], lineno, "source id");
      std::int64_t v = parse_int(tok[2], lineno, "target id");
      std::int64_t w = parse_int(tok[3], lineno, "weight");
      if (u < 1 || u > n) bail(lineno, "source id out of range");
      if (v < 1 || v > n) bail(lineno, "target id out of range");
      if (static_cast<std::int64_t>(edges.size()) == m_declared)
        bail(lineno, "more arcs than declared");
      edges.push_back({static_cast<VertexId>(u - 1),
                       static_cast<VertexId>(v - 1), w});
      continue;
    }
    bail(lineno, "unknown line type '" + tok[0] + "'");
  }
  if (!have_p) throw InputError("missing problem line");
  if (static_cast<std::int64_t>(edges.size()) != m_declared)
    throw InputError("declared " + std::to_string(m_declared) +
                     " arcs, found " + std::to_string(edges.size()));
  Graph g = Graph::build(n, std::move(edges));
  check_weight_bounds(g);
  return g;
}

Graph load_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p sp " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out << "a " << ed.src + 1 << ' ' << ed.dst + 1 << ' ' << ed.w << '\n';
  }
}

void write_dimacs_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_dimacs(out, g);
  if (!out) throw InputError("write failed for '" + path + "'");
}

}  // namespace negsssp
