#ifndef UIG_FPT_HPP
#define UIG_FPT_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "uig/graph.hpp"
#include "uig/holes.hpp"
#include "uig/phcag_solvers.hpp"
#include "uig/recognition.hpp"
#include "uig/witness.hpp"

namespace uig {

/// Quotas for vertex deletions, edge deletions and edge additions.
struct Budget {
  std::size_t k1 = 0, k2 = 0, k3 = 0;
  std::size_t total() const { return k1 + k2 + k3; }
  bool operator==(const Budget&) const = default;
};

/// Deleted vertices, deleted edges and added edges, all in input ids.
struct EditingSet {
  VertexSet deleted_vertices;
  EdgeSet deleted_edges;
  EdgeSet added_edges;
  bool operator==(const EditingSet&) const = default;
};

/// Search-tree counters: every call is a node; a leaf is a call that
/// answers without branching.
struct SearchStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
};

inline Graph apply_editing(const Graph& g, const EditingSet& s) {
  return without_vertices(edited(g, s.deleted_edges, s.added_edges), s.deleted_vertices);
}

namespace detail {

struct ComponentOutcome {
  VertexSet members;  // ids in the analysed graph
  Graph graph;
  RecognitionOutcome outcome;
};

inline std::vector<ComponentOutcome> classify_components(const Graph& g) {
  std::vector<ComponentOutcome> out;
  for (VertexSet& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    RecognitionOutcome r = recognize_f_free(sub.graph);
    out.push_back({std::move(sub.to_parent), std::move(sub.graph), std::move(r)});
  }
  return out;
}

inline const ForbiddenWitness* first_witness(const std::vector<ComponentOutcome>& comps, VertexSet& where) {
  for (const auto& c : comps) {
    if (auto* w = std::get_if<ForbiddenWitness>(&c.outcome)) {
      where.clear();
      for (Vertex v : w->vertices) where.push_back(c.members[v]);
      return w;
    }
  }
  return nullptr;
}

inline void count_node(SearchStats* st, bool leaf) {
  if (!st) return;
  ++st->nodes;
  if (leaf) ++st->leaves;
}

// ---------------------------------------------------------------------------
// vertex deletion

inline std::optional<VertexSet> uivd_search(const Graph& g, const VertexSet& ids, std::size_t k, SearchStats* st) {
  auto comps = classify_components(g);
  VertexSet at;
  if (first_witness(comps, at)) {
    count_node(st, k == 0);
    if (k == 0) return std::nullopt;
    for (Vertex v : at) {
      VertexSet map;
      Graph rest = without_vertices(g, std::span<const Vertex>(&v, 1), &map);
      VertexSet sub_ids;
      for (Vertex x : map) sub_ids.push_back(ids[x]);
      if (auto r = uivd_search(rest, sub_ids, k - 1, st)) {
        r->push_back(ids[v]);
        return r;
      }
    }
    return std::nullopt;
  }
  count_node(st, true);
  VertexSet out;
  for (const auto& c : comps) {
    VertexSet local = std::holds_alternative<FatW5>(c.outcome) ? fat_w5_vertex_deletion(std::get<FatW5>(c.outcome))
                                                                : min_vertex_cut(std::get<ArcModel>(c.outcome)).vertices;
    for (Vertex v : local) out.push_back(ids[c.members[v]]);
    if (out.size() > k) return std::nullopt;
  }
  return out;
}

// ---------------------------------------------------------------------------
// edge deletion

inline std::vector<EdgeSet> uied_branches(const Graph& g, const ForbiddenWitness& w, const VertexSet& at,
                                          std::size_t k) {
  std::vector<EdgeSet> out;
  auto e = [&](std::size_t i, std::size_t j) { return Edge(at[i], at[j]); };
  switch (w.kind) {
    case WitnessKind::Claw:
      for (std::size_t i = 1; i <= 3; ++i) out.push_back({e(0, i)});
      break;
    case WitnessKind::C4:
      for (std::size_t i = 0; i < 4; ++i) out.push_back({e(i, (i + 1) % 4)});
      break;
    case WitnessKind::S3:
      // [v1 v2 v3 u1 u2 u3]: two edges of some triangle u_i v_j v_k
      if (k < 2) break;
      for (std::size_t i = 0; i < 3; ++i) {
        std::size_t a = (i + 1) % 3, b = (i + 2) % 3;
        EdgeSet tri{e(3 + i, a), e(3 + i, b), e(a, b)};
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = x + 1; y < 3; ++y) out.push_back({tri[x], tri[y]});
      }
      break;
    case WitnessKind::S3Bar:
      // [u1 u2 u3 v1 v2 v3]: a pendant edge, or two triangle edges
      for (std::size_t i = 0; i < 3; ++i) out.push_back({e(i, 3 + i)});
      if (k < 2) break;
      for (std::size_t i = 0; i < 3; ++i) out.push_back({e(i, (i + 1) % 3), e((i + 1) % 3, (i + 2) % 3)});
      break;
    default:
      break;
  }
  for (EdgeSet& b : out) {
    for (const Edge& x : b) {
      if (!g.adjacent(x.u, x.v)) throw std::logic_error("uied: branch edge missing");
    }
  }
  return out;
}

inline std::optional<EdgeSet> uied_search(const Graph& g, std::size_t k, SearchStats* st) {
  auto comps = classify_components(g);
  VertexSet at;
  if (const ForbiddenWitness* w = first_witness(comps, at)) {
    auto branches = k == 0 ? std::vector<EdgeSet>{} : uied_branches(g, *w, at, k);
    count_node(st, branches.empty());
    for (const EdgeSet& b : branches) {
      if (auto r = uied_search(without_edges(g, b), k - b.size(), st)) {
        r->insert(r->end(), b.begin(), b.end());
        return r;
      }
    }
    return std::nullopt;
  }
  count_node(st, true);
  EdgeSet out;
  for (const auto& c : comps) {
    EdgeSet local = std::holds_alternative<FatW5>(c.outcome) ? fat_w5_edge_deletion(std::get<FatW5>(c.outcome))
                                                              : min_edge_cut(std::get<ArcModel>(c.outcome)).edges;
    for (const Edge& x : local) out.emplace_back(c.members[x.u], c.members[x.v]);
    if (out.size() > k) return std::nullopt;
  }
  return out;
}

// ---------------------------------------------------------------------------
// editing

struct EditNode {
  Graph g;                              // all input vertices; deleted ones kept isolated
  std::vector<char> gone;
  std::vector<std::vector<char>> touched;
};

struct Edit {
  enum Kind { DeleteVertex, DeleteEdge, AddEdge } kind;
  Vertex a = -1, b = -1;
};

inline std::size_t& quota(Budget& b, Edit::Kind k) {
  return k == Edit::DeleteVertex ? b.k1 : k == Edit::DeleteEdge ? b.k2 : b.k3;
}

/// All single edits inside a vertex set: vertices, then edges, then
/// non-edges, skipping pairs edited before and exhausted quotas.
inline std::vector<Edit> single_edits(const EditNode& s, const VertexSet& set, const Budget& b) {
  std::vector<Edit> out;
  if (b.k1 > 0) {
    for (Vertex v : set) out.push_back({Edit::DeleteVertex, v, -1});
  }
  for (int pass = 0; pass < 2; ++pass) {
    const bool edges = pass == 0;
    if ((edges ? b.k2 : b.k3) == 0) continue;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        const Vertex x = set[i], y = set[j];
        if (s.g.adjacent(x, y) != edges || s.touched[x][y]) continue;
        out.push_back({edges ? Edit::DeleteEdge : Edit::AddEdge, x, y});
      }
    }
  }
  return out;
}

/// Deleting a hole vertex, deleting a hole edge, or adding a chord h_i h_{i+2}.
inline std::vector<Edit> hole_edits(const EditNode& s, const VertexSet& hole, const Budget& b) {
  std::vector<Edit> out;
  const std::size_t l = hole.size();
  if (b.k1 > 0) {
    for (Vertex v : hole) out.push_back({Edit::DeleteVertex, v, -1});
  }
  if (b.k2 > 0) {
    for (std::size_t i = 0; i < l; ++i) {
      Vertex x = hole[i], y = hole[(i + 1) % l];
      if (!s.touched[x][y]) out.push_back({Edit::DeleteEdge, x, y});
    }
  }
  if (b.k3 > 0) {
    for (std::size_t i = 0; i < l; ++i) {
      Vertex x = hole[i], y = hole[(i + 2) % l];
      if (!s.touched[x][y]) out.push_back({Edit::AddEdge, x, y});
    }
  }
  return out;
}

inline bool uie_search(EditNode& s, Budget b, SearchStats* st);

inline bool try_edits(EditNode& s, const Budget& b, const std::vector<Edit>& edits, SearchStats* st) {
  for (const Edit& e : edits) {
    Budget nb = b;
    --quota(nb, e.kind);
    if (e.kind == Edit::DeleteVertex) {
      s.gone[e.a] = 1;
      if (uie_search(s, nb, st)) return true;
      s.gone[e.a] = 0;
      continue;
    }
    const Edge pair(e.a, e.b);
    Graph saved = s.g;
    s.g = e.kind == Edit::DeleteEdge ? without_edges(s.g, std::span<const Edge>(&pair, 1))
                                     : edited(s.g, {}, std::span<const Edge>(&pair, 1));
    s.touched[e.a][e.b] = s.touched[e.b][e.a] = 1;
    if (uie_search(s, nb, st)) return true;
    s.touched[e.a][e.b] = s.touched[e.b][e.a] = 0;
    s.g = std::move(saved);
  }
  return false;
}

/// Finishes a reduced node: per component the fewest edge deletions for
/// every vertex quota p <= k1, then the quotas are split by a knapsack.
inline bool finish_reduced(EditNode& s, const std::vector<ComponentOutcome>& comps, const VertexSet& to_parent,
                           const Budget& b) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  const std::size_t k1 = b.k1;
  std::vector<std::vector<ScanResult>> table;
  for (const auto& c : comps) {
    const ArcModel& m = std::get<ArcModel>(c.outcome);
    std::vector<ScanResult> row;
    for (std::size_t p = 0; p <= k1; ++p) row.push_back(mixed_min_edges(m, p));
    table.push_back(std::move(row));
  }
  // best[i][p]: fewest edges for the first i components with p vertex deletions
  std::vector<std::vector<std::size_t>> best(comps.size() + 1, std::vector<std::size_t>(k1 + 1, inf));
  std::vector<std::vector<std::size_t>> pick(comps.size() + 1, std::vector<std::size_t>(k1 + 1, 0));
  std::fill(best[0].begin(), best[0].end(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t p = 0; p <= k1; ++p) {
      for (std::size_t x = 0; x <= p; ++x) {
        if (best[i][p - x] == inf) continue;
        std::size_t cost = best[i][p - x] + table[i][x].value;
        if (cost < best[i + 1][p]) {
          best[i + 1][p] = cost;
          pick[i + 1][p] = x;
        }
      }
    }
  }
  if (best[comps.size()][k1] > b.k2) return false;
  std::size_t p = k1;
  for (std::size_t i = comps.size(); i-- > 0;) {
    const ScanResult& r = table[i][pick[i + 1][p]];
    p -= pick[i + 1][p];
    const VertexSet& mem = comps[i].members;
    for (Vertex v : r.vertices) s.gone[to_parent[mem[v]]] = 1;
    EdgeSet cut;
    for (const Edge& e : r.edges) cut.emplace_back(to_parent[mem[e.u]], to_parent[mem[e.v]]);
    s.g = without_edges(s.g, cut);
  }
  return true;
}

inline bool uie_search(EditNode& s, Budget b, SearchStats* st) {
  VertexSet dead, to_parent;
  for (Vertex v = 0; v < s.g.order(); ++v)
    if (s.gone[v]) dead.push_back(v);
  Graph alive = without_vertices(s.g, dead, &to_parent);
  auto comps = classify_components(alive);

  auto branch = [&](const VertexSet& local, bool hole) {
    VertexSet set;
    for (Vertex v : local) set.push_back(to_parent[v]);
    auto edits = hole ? hole_edits(s, set, b) : single_edits(s, set, b);
    count_node(st, edits.empty());
    return try_edits(s, b, edits, st);
  };

  for (const auto& c : comps) {
    VertexSet local;
    if (auto* w = std::get_if<ForbiddenWitness>(&c.outcome)) {
      for (Vertex v : w->vertices) local.push_back(c.members[v]);
      return branch(local, false);
    }
    if (auto* f = std::get_if<FatW5>(&c.outcome)) {
      // one vertex of each hole class: the C5 inside a W5
      for (const VertexSet& k : f->hole) local.push_back(c.members[k.front()]);
      return branch(local, false);
    }
  }
  // every component is proper Helly; dispose of short holes (C5 always)
  const std::size_t limit = std::max<std::size_t>(5, b.k3 + 3);
  for (const auto& c : comps) {
    const ArcModel& m = std::get<ArcModel>(c.outcome);
    if (!detail::arcs_cover_circle(m, detail::endpoint_table(m))) continue;
    VertexSet h = shortest_hole(c.graph, m);
    if (h.size() > limit) continue;
    VertexSet local;
    for (Vertex v : h) local.push_back(c.members[v]);
    return branch(local, true);
  }
  count_node(st, true);
  return finish_reduced(s, comps, to_parent, b);
}

}  // namespace detail

/// Unit interval vertex deletion: a set of at most k vertices whose removal
/// leaves a unit interval graph, or nothing.
inline std::optional<VertexSet> solve_uivd(const Graph& g, std::size_t k, SearchStats* stats = nullptr) {
  VertexSet ids(static_cast<std::size_t>(g.order()));
  std::iota(ids.begin(), ids.end(), 0);
  auto r = detail::uivd_search(g, ids, k, stats);
  if (r) std::sort(r->begin(), r->end());
  return r;
}

/// Unit interval edge deletion with at most k deleted edges.
inline std::optional<EdgeSet> solve_uied(const Graph& g, std::size_t k, SearchStats* stats = nullptr) {
  auto r = detail::uied_search(g, k, stats);
  if (r) std::sort(r->begin(), r->end());
  return r;
}

/// Unit interval editing within the budget (k1 vertex deletions, k2 edge
/// deletions, k3 edge additions).
inline std::optional<EditingSet> solve_uie(const Graph& g, Budget b, SearchStats* stats = nullptr) {
  const auto n = static_cast<std::size_t>(g.order());
  detail::EditNode s{g, std::vector<char>(n, 0), std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
  if (!detail::uie_search(s, b, stats)) return std::nullopt;
  EditingSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (s.gone[v]) out.deleted_vertices.push_back(v);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (s.gone[u]) continue;
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (s.gone[v]) continue;
      const bool before = g.adjacent(u, v), after = s.g.adjacent(u, v);
      if (before && !after) out.deleted_edges.emplace_back(u, v);
      if (!before && after) out.added_edges.emplace_back(u, v);
    }
  }
  return out;
}

/// Deletes whole forbidden subgraphs until none is left, then solves the
/// remainder exactly; at most six times the optimum.
inline VertexSet approx_uivd(const Graph& g) {
  VertexSet removed;
  VertexSet ids(static_cast<std::size_t>(g.order()));
  std::iota(ids.begin(), ids.end(), 0);
  Graph cur = g;
  for (;;) {
    auto comps = detail::classify_components(cur);
    VertexSet at;
    if (detail::first_witness(comps, at)) {
      VertexSet map;
      Graph rest = without_vertices(cur, at, &map);
      for (Vertex v : at) removed.push_back(ids[v]);
      VertexSet next;
      for (Vertex x : map) next.push_back(ids[x]);
      ids = std::move(next);
      cur = std::move(rest);
      continue;
    }
    for (const auto& c : comps) {
      VertexSet local = std::holds_alternative<FatW5>(c.outcome)
                            ? fat_w5_vertex_deletion(std::get<FatW5>(c.outcome))
                            : min_vertex_cut(std::get<ArcModel>(c.outcome)).vertices;
      for (Vertex v : local) removed.push_back(ids[c.members[v]]);
    }
    break;
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

}  // namespace uig

#endif  // UIG_FPT_HPP
