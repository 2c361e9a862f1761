#include "negsssp/record.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace negsssp {

ResultRecord ResultRecord::from_result(const Graph& g, const SsspResult& r,
                                       std::uint64_t seed,
                                       const SolveStats& st) {
  ResultRecord rec;
  rec.kind = r.kind;
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.source = r.source;
  rec.seed = seed;
  if (r.kind == SsspResult::Kind::Tree) {
    rec.dist = r.dist;
    rec.parent = r.parent;
  } else {
    rec.cycle = r.cycle.edges;
    rec.total = r.cycle.total;
  }
  rec.stats = st;
  return rec;
}

void ResultRecord::emit(std::ostream& out) const {
  out << "record " << (kind == SsspResult::Kind::Tree ? "tree" : "cycle")
      << '\n';
  out << "graph " << n << ' ' << m << '\n';
  out << "source " << source + 1 << '\n';
  out << "seed " << seed << '\n';
  if (kind == SsspResult::Kind::Tree) {
    for (VertexId v = 0; v < n; ++v) {
      out << "dist " << v + 1 << ' ';
      if (dist[v] == kInfWeight)
        out << "inf";
      else
        out << dist[v];
      out << '\n';
    }
    for (VertexId v = 0; v < n; ++v)
      if (parent[v] != kNoEdge)
        out << "parent " << v + 1 << ' ' << parent[v] + 1 << '\n';
  } else {
    out << "cycle";
    for (EdgeId e : cycle) out << ' ' << e + 1;
    out << '\n';
    out << "total " << total << '\n';
  }
  out << "stats rounds=" << stats.scale_rounds
      << " attempts=" << stats.attempts << " restarts=" << stats.restarts
      << " ops=" << stats.ops << '\n';
  if (time_ms.has_value()) out << "time_ms " << *time_ms << '\n';
  out << "end\n";
}

namespace {

[[noreturn]] void bad(std::int64_t line, const std::string& msg) {
  throw InputError("record line " + std::to_string(line) + ": " + msg);
}

}  // namespace

ResultRecord ResultRecord::parse(std::istream& in) {
  ResultRecord rec;
  std::string raw;
  std::int64_t lineno = 0;
  bool have_header = false, have_graph = false, have_end = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    std::istringstream ls(raw);
    std::string key;
    ls >> key;
    if (key == "record") {
      std::string k;
      if (!(ls >> k) || (k != "tree" && k != "cycle"))
        bad(lineno, "expected 'record tree' or 'record cycle'");
      rec.kind =
          k == "tree" ? SsspResult::Kind::Tree : SsspResult::Kind::Cycle;
      have_header = true;
    } else if (!have_header) {
      bad(lineno, "file does not start with a record line");
    } else if (key == "graph") {
      if (!(ls >> rec.n >> rec.m) || rec.n < 0 || rec.m < 0)
        bad(lineno, "bad graph line");
      if (rec.kind == SsspResult::Kind::Tree) {
        rec.dist.assign(rec.n, kInfWeight);
        rec.parent.assign(rec.n, kNoEdge);
      }
      have_graph = true;
    } else if (key == "source") {
      std::int64_t s;
      if (!(ls >> s) || !have_graph || s < 1 || s > rec.n)
        bad(lineno, "bad source line");
      rec.source = static_cast<VertexId>(s - 1);
    } else if (key == "seed") {
      if (!(ls >> rec.seed)) bad(lineno, "bad seed line");
    } else if (key == "dist") {
      std::int64_t v;
      std::string w;
      if (rec.kind != SsspResult::Kind::Tree)
        bad(lineno, "dist line in a cycle record");
      if (!(ls >> v >> w) || !have_graph || v < 1 || v > rec.n)
        bad(lineno, "bad dist line");
      if (w == "inf") {
        rec.dist[v - 1] = kInfWeight;
      } else {
        try {
          rec.dist[v - 1] = std::stoll(w);
        } catch (const std::exception&) {
          bad(lineno, "bad dist value '" + w + "'");
        }
      }
    } else if (key == "parent") {
      std::int64_t v, a;
      if (rec.kind != SsspResult::Kind::Tree)
        bad(lineno, "parent line in a cycle record");
      if (!(ls >> v >> a) || !have_graph || v < 1 || v > rec.n || a < 1 ||
          a > rec.m)
        bad(lineno, "bad parent line");
      rec.parent[v - 1] = static_cast<EdgeId>(a - 1);
    } else if (key == "cycle") {
      std::int64_t a;
      if (rec.kind != SsspResult::Kind::Cycle)
        bad(lineno, "cycle line in a tree record");
      rec.cycle.clear();
      while (ls >> a) {
        if (!have_graph || a < 1 || a > rec.m) bad(lineno, "bad arc id");
        rec.cycle.push_back(static_cast<EdgeId>(a - 1));
      }
    } else if (key == "total") {
      if (rec.kind != SsspResult::Kind::Cycle)
        bad(lineno, "total line in a tree record");
      if (!(ls >> rec.total)) bad(lineno, "bad total line");
    } else if (key == "stats") {
      std::string kv;
      while (ls >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) bad(lineno, "bad stats field");
        std::string name = kv.substr(0, eq);
        std::int64_t val;
        try {
          val = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
          bad(lineno, "bad stats value in '" + kv + "'");
        }
        if (name == "rounds")
          rec.stats.scale_rounds = val;
        else if (name == "attempts")
          rec.stats.attempts = val;
        else if (name == "restarts")
          rec.stats.restarts = val;
        else if (name == "ops")
          rec.stats.ops = static_cast<std::uint64_t>(val);
        else
          bad(lineno, "unknown stats field '" + name + "'");
      }
    } else if (key == "time_ms") {
      double t;
      if (!(ls >> t)) bad(lineno, "bad time_ms line");
      rec.time_ms = t;
    } else if (key == "end") {
      have_end = true;
      break;
    } else {
      bad(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_header) throw InputError("record: empty input");
  if (!have_graph) throw InputError("record: missing graph line");
  if (!have_end) throw InputError("record: missing end line");
  return rec;
}

}  // namespace negsssp
