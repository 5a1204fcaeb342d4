#ifndef UIGTOOL_CLI_HPP
#define UIGTOOL_CLI_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uig/fpt.hpp"
#include "uig/holes.hpp"
#include "uig/io.hpp"
#include "uig/oracle.hpp"
#include "uig/phcag_solvers.hpp"
#include "uig/recognition.hpp"

namespace uigtool {

using namespace uig;
using json = nlohmann::json;

enum Exit : int { Yes = 0, No = 1, InputError = 2, GuardViolation = 3, CertifyFailed = 4 };

// oracle size limits for --certify
inline constexpr Vertex kMembershipLimit = 14;
inline constexpr Vertex kVertexLimit = 10;
inline constexpr std::size_t kEdgeLimit = 24;
inline constexpr Vertex kEditingLimit = 8;

class Guard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool certify = false;
  bool json = false;
  bool quiet = false;
};

/// What a command found. Text and JSON renderings are derived from it.
struct Report {
  bool yes = true;
  std::string kind;  // certificate_kind
  VertexSet vertices_deleted;
  EdgeSet edges_deleted;
  EdgeSet edges_added;
  std::string text;
  json extra = json::object();
};

inline json edge_list(const EdgeSet& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

inline std::string vertex_line(const VertexSet& vs) {
  std::string s = "x:";
  for (Vertex v : vs) s += " " + std::to_string(v);
  return s;
}

inline std::string edge_line(char prefix, const EdgeSet& es) {
  std::string s(1, prefix);
  s += ':';
  for (std::size_t i = 0; i < es.size(); ++i) {
    s += (i ? "; " : " ") + std::to_string(es[i].u) + " " + std::to_string(es[i].v);
  }
  return s;
}

inline void emit(const Report& r, const Options& opt, std::ostream& out) {
  if (opt.quiet) return;
  if (opt.json) {
    json j = r.extra;
    j["answer"] = r.yes ? "YES" : "NO";
    j["certificate_kind"] = r.kind;
    j["vertices_deleted"] = r.vertices_deleted;
    j["edges_deleted"] = edge_list(r.edges_deleted);
    j["edges_added"] = edge_list(r.edges_added);
    out << j.dump() << '\n';
  } else {
    out << r.text;
  }
}

inline void require_limit(bool ok, const std::string& what) {
  if (!ok) throw Guard("--certify: " + what + " exceeds the oracle size limit");
}

inline void certify(bool ok, const std::string& what) {
  if (!ok) throw CertifyError("--certify: " + what);
}

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_recognize(const Graph& g, const Options& opt) {
  if (!is_connected(g)) throw GraphError("recognize: graph must be connected");
  RecognitionOutcome r = recognize_f_free(g);
  Report rep;
  std::ostringstream text;
  if (auto* m = std::get_if<ArcModel>(&r)) {
    if (opt.certify) certify(is_canonical(*m) && verify_model(g, *m).ok(), "model does not verify");
    rep.kind = "MODEL";
    text << "MODEL\n";
    write_arc_model(text, *m);
    json arcs = json::array();
    for (const Arc& a : m->arcs) arcs.push_back({a.ccp, a.cp});
    rep.extra["model"] = {{"perimeter", m->perimeter}, {"arcs", arcs}};
  } else if (auto* w = std::get_if<ForbiddenWitness>(&r)) {
    if (opt.certify) certify(verify_witness(g, *w), "witness does not verify");
    rep.yes = false;
    rep.kind = std::string(witness_tag(w->kind));
    text << to_string(*w) << '\n';
    rep.extra["witness"] = w->vertices;
  } else {
    const FatW5& f = std::get<FatW5>(r);
    if (opt.certify) certify(verify_fat_w5(g, f), "fat W5 does not verify");
    rep.yes = false;
    rep.kind = "FATW5";
    text << "FATW5\n";
    write_fat_w5(text, f);
    json classes = json::array();
    for (const auto& c : f.hole) classes.push_back(c);
    classes.push_back(f.hub);
    rep.extra["classes"] = classes;
  }
  rep.text = text.str();
  return rep;
}

inline Report cmd_shortest_hole(const Graph& g, const Options& opt) {
  std::optional<VertexSet> best;
  for (const VertexSet& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    PhcagOutcome r = recognize_phcag(sub.graph);
    if (auto* w = std::get_if<ForbiddenWitness>(&r)) {
      ForbiddenWitness in_input{w->kind, {}};
      for (Vertex v : w->vertices) in_input.vertices.push_back(sub.to_parent[v]);
      throw GraphError("shortest-hole: not a proper Helly circular-arc graph (" + to_string(in_input) + ")");
    }
    const ArcModel& m = std::get<ArcModel>(r);
    if (!detail::arcs_cover_circle(m, detail::endpoint_table(m))) continue;
    VertexSet hole = shortest_hole(sub.graph, m);
    for (Vertex& v : hole) v = sub.to_parent[v];
    if (!best || hole.size() < best->size()) best = std::move(hole);
  }
  if (opt.certify) {
    require_limit(g.order() <= kMembershipLimit, "vertex count");
    auto brute = oracle::shortest_hole_bruteforce(g);
    certify(brute.has_value() == best.has_value(), "chordality disagrees with the oracle");
    if (best) certify(is_hole(g, *best) && best->size() == brute->size(), "hole is not a shortest hole");
  }
  Report rep;
  rep.yes = best.has_value();
  rep.kind = best ? "HOLE" : "CHORDAL";
  if (best) {
    rep.text = "HOLE";
    for (Vertex v : *best) rep.text += " " + std::to_string(v);
    rep.text += "\n";
    rep.extra["hole"] = *best;
  } else {
    rep.text = "CHORDAL\n";
  }
  return rep;
}

inline Report deletion_report(std::optional<VertexSet> vs, std::optional<EdgeSet> es) {
  Report rep;
  rep.yes = vs || es;
  rep.kind = rep.yes ? "EDITING" : "NONE";
  if (!rep.yes) {
    rep.text = "NO\n";
    return rep;
  }
  rep.text = "YES\n";
  if (vs) {
    rep.vertices_deleted = *vs;
    rep.text += vertex_line(*vs) + "\n";
  }
  if (es) {
    rep.edges_deleted = *es;
    rep.text += edge_line('-', *es) + "\n";
  }
  return rep;
}

inline Report cmd_solve(const std::string& problem, const Graph& g, std::size_t k, Budget b, const Options& opt) {
  if (problem == "uivd") {
    auto r = solve_uivd(g, k);
    if (opt.certify) {
      if (r) {
        require_limit(g.order() <= kMembershipLimit, "vertex count");
        certify(r->size() <= k && oracle::is_unit_interval_bruteforce(without_vertices(g, *r)),
                "deletion set does not leave a unit interval graph");
      } else {
        require_limit(g.order() <= kVertexLimit, "vertex count");
        certify(oracle::brute_min_uivd(g, kVertexLimit).value > k, "oracle finds a solution");
      }
    }
    return deletion_report(r, std::nullopt);
  }
  if (problem == "uied") {
    auto r = solve_uied(g, k);
    if (opt.certify) {
      if (r) {
        require_limit(g.order() <= kMembershipLimit, "vertex count");
        certify(r->size() <= k && oracle::is_unit_interval_bruteforce(without_edges(g, *r)),
                "deletion set does not leave a unit interval graph");
      } else {
        require_limit(g.size() <= kEdgeLimit, "edge count");
        certify(oracle::brute_min_uied(g, kEdgeLimit).value > k, "oracle finds a solution");
      }
    }
    return deletion_report(std::nullopt, r);
  }
  auto r = solve_uie(g, b);
  if (opt.certify) {
    if (r) {
      require_limit(g.order() <= kMembershipLimit, "vertex count");
      certify(r->deleted_vertices.size() <= b.k1 && r->deleted_edges.size() <= b.k2 && r->added_edges.size() <= b.k3 &&
                  oracle::is_unit_interval_bruteforce(apply_editing(g, *r)),
              "editing set does not yield a unit interval graph");
    } else {
      require_limit(g.order() <= kEditingLimit, "vertex count");
      certify(!oracle::brute_min_editing(g, {b.k1, b.k2, b.k3}, kEditingLimit), "oracle finds a solution");
    }
  }
  Report rep;
  rep.yes = r.has_value();
  rep.kind = rep.yes ? "EDITING" : "NONE";
  if (!r) {
    rep.text = "NO\n";
    return rep;
  }
  rep.vertices_deleted = r->deleted_vertices;
  rep.edges_deleted = r->deleted_edges;
  rep.edges_added = r->added_edges;
  rep.text = "YES\n" + vertex_line(r->deleted_vertices) + "\n" + edge_line('-', r->deleted_edges) + "\n" +
             edge_line('+', r->added_edges) + "\n";
  return rep;
}

inline Report cmd_approx(const Graph& g, const Options& opt) {
  VertexSet r = approx_uivd(g);
  std::sort(r.begin(), r.end());
  if (opt.certify) {
    require_limit(g.order() <= kVertexLimit, "vertex count");
    certify(oracle::is_unit_interval_bruteforce(without_vertices(g, r)),
            "deletion set does not leave a unit interval graph");
    certify(r.size() <= 6 * oracle::brute_min_uivd(g, kVertexLimit).value, "deletion set exceeds six times the optimum");
  }
  Report rep = deletion_report(r, std::nullopt);
  rep.kind = "APPROX";
  rep.text += "size: " + std::to_string(r.size()) + "\n";
  rep.extra["size"] = r.size();
  return rep;
}

/// The graph goes to stdout in the graph format; the model or edit script
/// follows as comment lines, so the output is itself a valid graph file.
inline Report cmd_gen(const std::string& kind, Vertex n, std::uint64_t seed, Vertex edits) {
  Report rep;
  rep.kind = kind == "phcag" ? "MODEL" : "SCRIPT";
  std::ostringstream text;
  if (kind == "phcag") {
    auto gen = oracle::random_phcag(n, seed);
    write_graph(text, gen.graph);
    std::ostringstream model;
    write_arc_model(model, gen.model);
    text << "# MODEL\n";
    std::istringstream lines(model.str());
    for (std::string line; std::getline(lines, line);) text << "# " << line << '\n';
    json arcs = json::array();
    for (const Arc& a : gen.model.arcs) arcs.push_back({a.ccp, a.cp});
    rep.extra["graph"] = {{"n", gen.graph.order()}, {"edges", edge_list(gen.graph.edges())}};
    rep.extra["model"] = {{"perimeter", gen.model.perimeter}, {"arcs", arcs}};
  } else {
    auto p = oracle::perturbed(n, seed, edits);
    write_graph(text, p.graph);
    text << "# SCRIPT\n";
    for (const Edge& e : p.flipped) text << "# " << (p.planted.adjacent(e.u, e.v) ? '-' : '+') << ' ' << e.u << ' ' << e.v << '\n';
    json script = json::array();
    for (const Edge& e : p.flipped) script.push_back({p.planted.adjacent(e.u, e.v) ? "-" : "+", e.u, e.v});
    rep.extra["graph"] = {{"n", p.graph.order()}, {"edges", edge_list(p.graph.edges())}};
    rep.extra["script"] = script;
  }
  rep.text = text.str();
  return rep;
}

/// Wall time in milliseconds of the three sweeps on the model of C_n.
inline Report cmd_bench(const std::vector<Vertex>& sizes) {
  Report rep;
  rep.kind = "BENCH";
  json rows = json::array();
  std::ostringstream text;
  text << "n shortest_hole_ms min_vertex_cut_ms min_edge_cut_ms\n";
  for (Vertex n : sizes) {
    ArcModel m = oracle::cycle_model(n);
    Graph g = represented_graph(m);
    auto time = [](auto&& f) {
      auto t0 = std::chrono::steady_clock::now();
      f();
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };
    double h = time([&] { (void)shortest_hole(g, m); });
    double v = time([&] { (void)min_vertex_cut(m); });
    double e = time([&] { (void)min_edge_cut(m); });
    text << n << ' ' << h << ' ' << v << ' ' << e << '\n';
    rows.push_back({{"n", n}, {"shortest_hole_ms", h}, {"min_vertex_cut_ms", v}, {"min_edge_cut_ms", e}});
  }
  rep.text = text.str();
  rep.extra["runs"] = rows;
  return rep;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit interval recognition, hole search and deletion/editing solvers"};
  app.name("uigtool");
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--certify", opt.certify, "re-verify the output with the brute-force oracle (small inputs only)");
  app.add_flag("--json", opt.json, "print one JSON object");
  app.add_flag("-q,--quiet", opt.quiet, "print nothing; report through the exit code");

  std::string file, problem, kind = "phcag";
  std::size_t k = 0;
  Budget b;
  Vertex n = 0, edits = 2;
  std::uint64_t seed = 0;
  std::vector<Vertex> sizes{10000, 30000, 100000};

  auto* recognize = app.add_subcommand("recognize", "proper Helly model, forbidden subgraph or fat W5");
  recognize->add_option("file", file, "graph file")->required();
  auto* hole = app.add_subcommand("shortest-hole", "shortest hole of a proper Helly circular-arc graph");
  hole->add_option("file", file, "graph file")->required();
  auto* solve = app.add_subcommand("solve", "exact deletion or editing within a budget");
  solve->add_option("problem", problem, "uivd, uied or uie")->required()->check(CLI::IsMember({"uivd", "uied", "uie"}));
  solve->add_option("file", file, "graph file")->required();
  auto* k_opt = solve->add_option("-k", k, "budget for uivd and uied");
  solve->add_option("--k1", b.k1, "vertex deletions for uie");
  solve->add_option("--k2", b.k2, "edge deletions for uie");
  solve->add_option("--k3", b.k3, "edge additions for uie");
  auto* approx = app.add_subcommand("approx", "six-approximation of vertex deletion");
  approx->add_option("problem", problem, "uivd")->required()->check(CLI::IsMember({"uivd"}));
  approx->add_option("file", file, "graph file")->required();
  auto* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("--kind", kind, "phcag or perturbed")->check(CLI::IsMember({"phcag", "perturbed"}));
  gen->add_option("--n", n, "vertex count")->required()->check(CLI::Range(1, 1 << 20));
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--edits", edits, "toggled pairs for perturbed")->check(CLI::NonNegativeNumber);
  auto* bench = app.add_subcommand("bench", "timings of the sweeps on plain cycles");
  bench->add_option("--n", sizes, "cycle lengths")->check(CLI::Range(4, 1 << 24));
  for (auto* sub : {recognize, hole, solve, approx, gen, bench}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Yes : InputError;
  }

  try {
    Report rep;
    if (recognize->parsed()) {
      rep = cmd_recognize(read_graph_file(file), opt);
    } else if (hole->parsed()) {
      rep = cmd_shortest_hole(read_graph_file(file), opt);
    } else if (solve->parsed()) {
      if (problem != "uie" && k_opt->count() == 0) throw ParseError("solve " + problem + ": -k is required");
      rep = cmd_solve(problem, read_graph_file(file), k, b, opt);
    } else if (approx->parsed()) {
      rep = cmd_approx(read_graph_file(file), opt);
    } else if (gen->parsed()) {
      if (kind == "phcag" && n < 4) throw ParseError("gen phcag: --n must be at least 4");
      rep = cmd_gen(kind, n, seed, edits);
    } else {
      rep = cmd_bench(sizes);
    }
    emit(rep, opt, out);
    return rep.yes ? Yes : No;
  } catch (const Guard& e) {
    err << e.what() << '\n';
    return GuardViolation;
  } catch (const CertifyError& e) {
    err << e.what() << '\n';
    return CertifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }
}

}  // namespace uigtool

#endif  // UIGTOOL_CLI_HPP
