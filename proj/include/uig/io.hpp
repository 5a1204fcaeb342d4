#ifndef UIG_IO_HPP
#define UIG_IO_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uig/arc_model.hpp"
#include "uig/graph.hpp"
#include "uig/recognition.hpp"
#include "uig/witness.hpp"

namespace uig {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Non-blank lines with '#' comments stripped, each with its line number.
struct Lines {
  std::vector<std::pair<std::size_t, std::string>> rows;
  std::size_t at = 0;

  explicit Lines(std::istream& in) {
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
      if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      rows.emplace_back(no, line);
    }
  }

  bool done() const { return at == rows.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t no = at < rows.size() ? rows[at].first : (rows.empty() ? 0 : rows.back().first);
    throw ParseError("line " + std::to_string(no) + ": " + what);
  }

  /// Reads exactly `count` integers from the next line.
  std::vector<std::int64_t> ints(std::size_t count, const char* what) {
    if (done()) fail(std::string("missing ") + what);
    std::istringstream row(rows[at].second);
    std::vector<std::int64_t> out;
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      std::int64_t x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) fail("'" + tok + "' is not an integer");
      out.push_back(x);
    }
    if (out.size() != count) fail(std::string("expected ") + std::to_string(count) + " integers for " + what);
    ++at;
    return out;
  }

  void finish() {
    if (!done()) fail("unexpected trailing content");
  }
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace detail

/// Graph text format: `n m`, then m lines `u v`.
inline Graph read_graph(std::istream& in) {
  detail::Lines lines(in);
  auto head = lines.ints(2, "header 'n m'");
  if (head[0] < 0 || head[1] < 0) lines.fail("negative count in header");
  if (head[0] > INT32_MAX) lines.fail("vertex count too large");
  const auto n = static_cast<Vertex>(head[0]);
  EdgeSet edges;
  for (std::int64_t i = 0; i < head[1]; ++i) {
    auto e = lines.ints(2, "edge 'u v'");
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) lines.fail("endpoint out of range");
    if (e[0] == e[1]) lines.fail("self-loop");
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  lines.finish();
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto d = std::adjacent_find(sorted.begin(), sorted.end()); d != sorted.end()) {
    throw ParseError("duplicate edge " + std::to_string(d->u) + " " + std::to_string(d->v));
  }
  return Graph::from_edges(n, edges);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline Graph read_graph_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// Arc-model text format: `n L`, then n lines `ccp cp`.
inline ArcModel read_arc_model(std::istream& in) {
  detail::Lines lines(in);
  auto head = lines.ints(2, "header 'n L'");
  if (head[0] < 0) lines.fail("negative arc count");
  if (head[1] <= 0) lines.fail("perimeter must be positive");
  ArcModel m;
  m.perimeter = head[1];
  for (std::int64_t i = 0; i < head[0]; ++i) {
    auto a = lines.ints(2, "arc 'ccp cp'");
    if (a[0] < 0 || a[0] >= m.perimeter || a[1] < 0 || a[1] >= m.perimeter) lines.fail("endpoint off the circle");
    m.arcs.push_back({a[0], a[1]});
  }
  lines.finish();
  return m;
}

inline ArcModel parse_arc_model(const std::string& text) {
  std::istringstream in(text);
  return read_arc_model(in);
}

inline ArcModel read_arc_model_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_arc_model(in);
}

inline void write_arc_model(std::ostream& out, const ArcModel& m) {
  out << m.size() << ' ' << m.perimeter << '\n';
  for (const Arc& a : m.arcs) out << a.ccp << ' ' << a.cp << '\n';
}

inline ForbiddenWitness parse_witness(const std::string& line) {
  std::istringstream in(line);
  std::string word, tag;
  if (!(in >> word) || word != "WITNESS") throw ParseError("witness line must start with WITNESS");
  if (!(in >> tag)) throw ParseError("witness without a tag");
  auto kind = witness_kind_from_tag(tag);
  if (!kind) throw ParseError("unknown witness tag " + tag);
  ForbiddenWitness w;
  w.kind = *kind;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v > INT32_MAX) throw ParseError("bad witness vertex '" + tok + "'");
    w.vertices.push_back(static_cast<Vertex>(v));
  }
  return w;
}

/// Six lines `CLASS i: ...`; classes 0..4 are the fat hole in order, 5 the hub.
inline void write_fat_w5(std::ostream& out, const FatW5& f) {
  for (std::size_t i = 0; i < 6; ++i) {
    const VertexSet& c = i < 5 ? f.hole[i] : f.hub;
    out << "CLASS " << i << ':';
    for (Vertex v : c) out << ' ' << v;
    out << '\n';
  }
}

inline FatW5 read_fat_w5(std::istream& in) {
  FatW5 f;
  std::string line;
  std::size_t seen = 0;
  while (seen < 6 && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::string word, label;
    row >> word >> label;
    if (word != "CLASS" || label != std::to_string(seen) + ":") {
      throw ParseError("expected 'CLASS " + std::to_string(seen) + ":'");
    }
    VertexSet& c = seen < 5 ? f.hole[seen] : f.hub;
    long long v = 0;
    while (row >> v) {
      if (v < 0 || v > INT32_MAX) throw ParseError("bad class vertex");
      c.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof()) throw ParseError("bad class vertex");
    ++seen;
  }
  if (seen != 6) throw ParseError("fat W5 needs six CLASS lines");
  return f;
}

}  // namespace uig

#endif  // UIG_IO_HPP
