#ifndef UIG_PHCAG_SOLVERS_HPP
#define UIG_PHCAG_SOLVERS_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "uig/arc_model.hpp"
#include "uig/graph.hpp"
#include "uig/holes.hpp"
#include "uig/recognition.hpp"

namespace uig {

/// Best probe of a scan over the 2n probes i + 0.5 and the deletion set it
/// realizes; value is the number of deleted edges, or of deleted vertices
/// for the vertex scan.
struct ScanResult {
  CutPoint alpha{0};
  std::size_t value = 0;
  VertexSet vertices;
  EdgeSet edges;
  bool operator==(const ScanResult&) const = default;
};

namespace detail {

/// Graph, endpoint table and left-right relation of a canonical model.
struct ModelSweep {
  Graph g;
  EndpointTable ends;
  std::vector<VertexSet> out, in;  // out[v]: v -> u; in[v]: u -> v
  bool covers = false;
};

inline ModelSweep model_sweep(const ArcModel& model, const char* who) {
  require_canonical(model, who);
  ModelSweep s;
  s.g = represented_graph(model);
  s.ends = endpoint_table(model);
  s.covers = arcs_cover_circle(model, s.ends);
  s.out.resize(static_cast<std::size_t>(model.size()));
  s.in.resize(static_cast<std::size_t>(model.size()));
  if (!s.covers) return s;
  for (const Edge& e : s.g.edges()) {
    if (contains_point(model.arcs[e.v], model.arcs[e.u].cp)) {
      s.out[e.u].push_back(e.v);
      s.in[e.v].push_back(e.u);
    } else {
      s.out[e.v].push_back(e.u);
      s.in[e.u].push_back(e.v);
    }
  }
  return s;
}

inline std::size_t clique_size_at(const ArcModel& model, CutPoint alpha) {
  std::size_t k = 0;
  for (const Arc& a : model.arcs) k += contains_probe(a, alpha);
  return k;
}

/// |K(i + 0.5)| for every probe i, by one sweep.
inline std::vector<std::size_t> clique_profile(const ArcModel& model, const EndpointTable& t) {
  std::vector<std::size_t> k(static_cast<std::size_t>(model.perimeter));
  k[0] = clique_size_at(model, CutPoint{0});
  for (std::int64_t i = 1; i < model.perimeter; ++i) k[i] = t.is_ccp[i] ? k[i - 1] + 1 : k[i - 1] - 1;
  return k;
}

/// Directed cut of the model without `removed`, at alpha, evaluated directly.
inline EdgeSet residual_directed_cut(const ArcModel& model, const Graph& g, const std::vector<char>& removed,
                                     CutPoint alpha) {
  EdgeSet out;
  for (Vertex x = 0; x < model.size(); ++x) {
    if (removed[x] || !contains_probe(model.arcs[x], alpha)) continue;
    for (Vertex y : g.neighbors(x)) {
      if (removed[y] || contains_probe(model.arcs[y], alpha)) continue;
      if (contains_point(model.arcs[y], model.arcs[x].cp)) out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Thinnest point for vertices: the probe with the smallest clique.
inline ScanResult min_vertex_cut(const ArcModel& model) {
  auto s = detail::model_sweep(model, "min_vertex_cut");
  if (!s.covers) return {};
  auto k = detail::clique_profile(model, s.ends);
  auto best = static_cast<std::int64_t>(std::min_element(k.begin(), k.end()) - k.begin());
  ScanResult r;
  r.alpha = CutPoint{best};
  r.vertices = point_clique(model, r.alpha);
  r.value = r.vertices.size();
  return r;
}

/// |E->(i + 0.5)| for every probe i. Passing ccp(v) moves v into the cut
/// side: its in-edges leave the cut and its out-edges enter it.
inline std::vector<std::size_t> edge_cut_profile(const ArcModel& model) {
  auto s = detail::model_sweep(model, "edge_cut_profile");
  if (!s.covers) return std::vector<std::size_t>(static_cast<std::size_t>(model.perimeter), 0);
  std::vector<std::size_t> c(static_cast<std::size_t>(model.perimeter));
  c[0] = directed_cut(model, s.g, CutPoint{0}).size();
  for (std::int64_t i = 1; i < model.perimeter; ++i) {
    c[i] = c[i - 1];
    if (!s.ends.is_ccp[i]) continue;
    const Vertex v = s.ends.owner[i];
    c[i] = c[i] + s.out[v].size() - s.in[v].size();
  }
  return c;
}

/// Thinnest point for edges: the probe with the smallest directed cut.
inline ScanResult min_edge_cut(const ArcModel& model) {
  auto s = detail::model_sweep(model, "min_edge_cut");
  if (!s.covers) return {};
  auto c = edge_cut_profile(model);
  auto best = static_cast<std::int64_t>(std::min_element(c.begin(), c.end()) - c.begin());
  ScanResult r;
  r.alpha = CutPoint{best};
  r.edges = directed_cut(model, s.g, r.alpha);
  r.value = r.edges.size();
  return r;
}

/// Fewest edge deletions once at most p vertices are deleted. At probe
/// alpha the p most clockwise arcs of K(alpha) go, then the directed cut
/// of what is left; the p arcs are the last p to start before alpha, kept
/// in a queue along the sweep.
inline ScanResult mixed_min_edges(const ArcModel& model, std::size_t p) {
  if (p == 0) return min_edge_cut(model);
  auto s = detail::model_sweep(model, "mixed_min_edges");
  if (!s.covers) return {};
  auto k = detail::clique_profile(model, s.ends);
  auto thin = static_cast<std::int64_t>(std::min_element(k.begin(), k.end()) - k.begin());
  if (k[thin] <= p) {
    ScanResult r;
    r.alpha = CutPoint{thin};
    r.vertices = point_clique(model, r.alpha);
    return r;
  }

  const std::int64_t len = model.perimeter;
  // queue at probe 0: the last p arcs to start at or before 0, oldest first
  std::deque<Vertex> queue;
  for (std::int64_t i = 0; queue.size() < p; i = (i + len - 1) % len) {
    if (s.ends.is_ccp[i]) queue.push_front(s.ends.owner[i]);
  }
  std::vector<char> removed(static_cast<std::size_t>(model.size()), 0);
  for (Vertex x : queue) removed[x] = 1;

  std::vector<std::size_t> q(static_cast<std::size_t>(len));
  q[0] = detail::residual_directed_cut(model, s.g, removed, CutPoint{0}).size();
  for (std::int64_t i = 1; i < len; ++i) {
    q[i] = q[i - 1];
    if (!s.ends.is_ccp[i]) continue;
    const Vertex v = s.ends.owner[i];
    const Vertex u = queue.front();
    // edges x -> v with x kept leave the cut; v itself is deleted
    std::size_t lost = 0;
    for (Vertex x : s.in[v]) lost += !removed[x];
    queue.pop_front();
    removed[u] = 0;
    queue.push_back(v);
    removed[v] = 1;
    // u is kept again: its out-edges to arcs starting after i join the cut
    std::size_t gained = 0;
    for (Vertex y : s.out[u]) gained += !removed[y] && !contains_probe(model.arcs[y], CutPoint{i});
    q[i] = q[i] + gained - lost;
  }

  auto best = static_cast<std::int64_t>(std::min_element(q.begin(), q.end()) - q.begin());
  ScanResult r;
  r.alpha = CutPoint{best};
  std::fill(removed.begin(), removed.end(), 0);
  for (std::int64_t i = best; r.vertices.size() < p; i = (i + len - 1) % len) {
    if (!s.ends.is_ccp[i]) continue;
    r.vertices.push_back(s.ends.owner[i]);
    removed[s.ends.owner[i]] = 1;
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  r.edges = detail::residual_directed_cut(model, s.g, removed, r.alpha);
  r.value = r.edges.size();
  return r;
}

/// Deleting the smallest class of the fat hole leaves a unit interval graph.
inline VertexSet fat_w5_vertex_deletion(const FatW5& f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 5; ++i) {
    if (f.hole[i].size() < f.hole[best].size()) best = i;
  }
  VertexSet out = f.hole[best];
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t fat_w5_edge_cost(const FatW5& f, std::size_t i) {
  const std::size_t a = f.hole[i].size(), b = f.hole[(i + 1) % 5].size();
  return a * b + std::min(a, b) * f.hub.size();
}

/// Cheapest way to cut the fat hole between K_i and K_{i+1}: all edges
/// between them and the hub edges of the smaller one.
inline EdgeSet fat_w5_edge_deletion(const FatW5& f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 5; ++i) {
    if (fat_w5_edge_cost(f, i) < fat_w5_edge_cost(f, best)) best = i;
  }
  const VertexSet& a = f.hole[best];
  const VertexSet& b = f.hole[(best + 1) % 5];
  EdgeSet out;
  for (Vertex x : a)
    for (Vertex y : b) out.emplace_back(x, y);
  for (Vertex x : a.size() <= b.size() ? a : b)
    for (Vertex h : f.hub) out.emplace_back(x, h);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace uig

#endif  // UIG_PHCAG_SOLVERS_HPP
