#ifndef UIG_GRAPH_HPP
#define UIG_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uig {

using Vertex = std::int32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<Edge>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Values are immutable once built; every editing operation below returns a
/// new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n) : adj_(static_cast<std::size_t>(n)) {}

  /// Builds a graph from an edge list. Self-loops, duplicate edges and
  /// out-of-range ids are rejected.
  static Graph from_edges(Vertex n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g(n);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) {
        throw GraphError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                         " out of range");
      }
      if (e.u == e.v) throw GraphError("self-loop at " + std::to_string(e.u));
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        throw GraphError("duplicate edge");
      }
    }
    g.m_ = edges.size();
    return g;
  }

  static Graph from_edges(Vertex n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Like from_edges but silently drops duplicates (never self-loops).
  static Graph from_edges_dedup(Vertex n, EdgeSet edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return from_edges(n, edges);
  }

  /// Builds a graph from adjacency lists, which must be sorted, free of
  /// self-loops and duplicates, and symmetric.
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    Graph g;
    const auto n = static_cast<Vertex>(adj.size());
    // symmetric iff, scanning u upwards, each u > w appears in adj[w] in
    // order and covers every entry of adj[w] below w
    std::vector<std::size_t> matched(adj.size(), 0);
    std::size_t ends = 0;
    for (Vertex u = 0; u < n; ++u) {
      const auto& nb = adj[u];
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const Vertex w = nb[i];
        if (w < 0 || w >= n || w == u || (i > 0 && nb[i - 1] >= w)) throw GraphError("malformed adjacency list");
        if (w > u) {
          auto& at = matched[w];
          if (at >= adj[w].size() || adj[w][at] != u) throw GraphError("asymmetric adjacency");
          ++at;
        }
      }
      if (matched[u] < nb.size() && nb[matched[u]] < u) throw GraphError("asymmetric adjacency");
      ends += nb.size();
    }
    g.adj_ = std::move(adj);
    g.m_ = ends / 2;
    return g;
  }

  Vertex order() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[check(v)]; }
  std::size_t degree(Vertex v) const { return adj_[check(v)].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[check(u)];
    check(v);
    return std::binary_search(a.begin(), a.end(), v);
  }

  EdgeSet edges() const {
    EdgeSet out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  Vertex check(Vertex v) const {
    if (v < 0 || v >= order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    return v;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Result of taking an induced subgraph: the new graph and, for each new
/// vertex id, the id it had in the parent graph.
struct InducedSubgraph {
  Graph graph;
  VertexSet to_parent;

  Vertex parent(Vertex v) const { return to_parent[v]; }

  VertexSet lift(std::span<const Vertex> vs) const {
    VertexSet out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(to_parent[v]);
    return out;
  }

  EdgeSet lift_edges(std::span<const Edge> es) const {
    EdgeSet out;
    out.reserve(es.size());
    for (const Edge& e : es) out.emplace_back(to_parent[e.u], to_parent[e.v]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Subgraph induced by `s`. Vertex i of the result is the i-th smallest id of
/// `s`.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet keep(s.begin(), s.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order()) {
      throw GraphError("vertex " + std::to_string(keep[i]) + " out of range");
    }
    local[keep[i]] = static_cast<Vertex>(i);
  }
  // local ids are monotone in parent ids, so the lists stay sorted
  std::vector<VertexSet> adj(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    adj[i].reserve(g.degree(keep[i]));
    for (Vertex w : g.neighbors(keep[i])) {
      if (local[w] >= 0) adj[i].push_back(local[w]);
    }
  }
  return {Graph::from_adjacency(std::move(adj)), std::move(keep)};
}

inline Graph without_vertices(const Graph& g, std::span<const Vertex> removed,
                              VertexSet* to_parent = nullptr) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone.at(v) = 1;
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  auto sub = induced_subgraph(g, keep);
  if (to_parent) *to_parent = std::move(sub.to_parent);
  return std::move(sub.graph);
}

/// Same vertex set, with `removed` edges deleted and `added` edges inserted.
inline Graph edited(const Graph& g, std::span<const Edge> removed, std::span<const Edge> added = {}) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<VertexSet> drop(n), put(n);
  for (const Edge& e : removed) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v) throw GraphError("removed edge out of range");
    drop[e.u].push_back(e.v);
    drop[e.v].push_back(e.u);
  }
  for (const Edge& e : added) {
    if (e.u < 0 || e.v >= g.order()) throw GraphError("added edge out of range");
    if (e.u == e.v) throw GraphError("self-loop at " + std::to_string(e.u));
    put[e.u].push_back(e.v);
    put[e.v].push_back(e.u);
  }
  std::vector<VertexSet> adj(n);
  VertexSet tmp;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    if (drop[u].empty() && put[u].empty()) {
      adj[u].assign(nb.begin(), nb.end());
      continue;
    }
    std::sort(drop[u].begin(), drop[u].end());
    std::sort(put[u].begin(), put[u].end());
    tmp.clear();
    std::set_difference(nb.begin(), nb.end(), drop[u].begin(), drop[u].end(), std::back_inserter(tmp));
    std::set_union(tmp.begin(), tmp.end(), put[u].begin(), put[u].end(), std::back_inserter(adj[u]));
    adj[u].erase(std::unique(adj[u].begin(), adj[u].end()), adj[u].end());
  }
  return Graph::from_adjacency(std::move(adj));
}

inline Graph without_edges(const Graph& g, std::span<const Edge> removed) {
  return edited(g, removed);
}

inline bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Vertex> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  VertexSet stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const auto id = static_cast<Vertex>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Partition of V(g) into true twin classes (equal closed neighborhoods),
/// computed by refining with every closed neighborhood. Classes are sorted
/// internally and ordered by smallest member.
inline std::vector<VertexSet> twin_partition(const Graph& g) {
  const Vertex n = g.order();
  if (n == 0) return {};
  std::vector<Vertex> cls(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> members(1);
  members[0].resize(static_cast<std::size_t>(n));
  std::iota(members[0].begin(), members[0].end(), 0);

  std::vector<Vertex> hits;           // per-class count of marked members
  std::vector<Vertex> split_to;       // per-class id of the split-off class
  std::vector<Vertex> touched;
  VertexSet closed;
  for (Vertex v = 0; v < n; ++v) {
    closed.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.push_back(v);
    hits.resize(members.size(), 0);
    touched.clear();
    for (Vertex u : closed) {
      if (hits[cls[u]]++ == 0) touched.push_back(cls[u]);
    }
    split_to.assign(members.size(), -1);
    for (Vertex c : touched) {
      if (hits[c] < static_cast<Vertex>(members[c].size())) {
        split_to[c] = static_cast<Vertex>(members.size());
        members.emplace_back();
      }
    }
    for (Vertex u : closed) {
      Vertex c = cls[u];
      if (split_to[c] >= 0) {
        cls[u] = split_to[c];
        members[split_to[c]].push_back(u);
      }
    }
    for (Vertex c : touched) {
      if (split_to[c] >= 0) {
        auto& m = members[c];
        m.erase(std::remove_if(m.begin(), m.end(), [&](Vertex u) { return cls[u] != c; }), m.end());
      }
      hits[c] = 0;
    }
    hits.resize(members.size(), 0);
  }
  for (auto& m : members) std::sort(m.begin(), m.end());
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace uig

#endif  // UIG_GRAPH_HPP
