#ifndef UIG_CHORDAL_HPP
#define UIG_CHORDAL_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "uig/graph.hpp"

namespace uig {

/// Either a perfect elimination ordering or a hole.
struct ChordalityCertificate {
  bool chordal = true;
  VertexSet elimination_order;  // set when chordal
  VertexSet hole;               // cyclic order, set when not chordal
};

/// True iff `cycle` lists an induced cycle of g on at least four vertices,
/// in cyclic order. Runs in time linear in the degrees of the cycle vertices.
inline bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<std::int64_t> at(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < k; ++i) {
    Vertex v = cycle[i];
    if (v < 0 || v >= g.order() || at[v] >= 0) return false;
    at[v] = static_cast<std::int64_t>(i);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto prev = static_cast<std::int64_t>((i + k - 1) % k);
    const auto next = static_cast<std::int64_t>((i + 1) % k);
    int seen = 0;
    for (Vertex w : g.neighbors(cycle[i])) {
      if (at[w] < 0) continue;
      if (at[w] != prev && at[w] != next) return false;
      ++seen;
    }
    if (seen != 2) return false;
  }
  return true;
}

/// Maximum cardinality search. Returns vertices in visit order.
inline VertexSet maximum_cardinality_search(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Vertex> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> bucket(static_cast<std::size_t>(n) + 1);
  for (Vertex v = n - 1; v >= 0; --v) bucket[0].push_back(v);
  VertexSet order;
  order.reserve(static_cast<std::size_t>(n));
  std::size_t top = 0;
  while (order.size() < static_cast<std::size_t>(n)) {
    Vertex v = -1;
    while (v < 0) {
      auto& b = bucket[top];
      while (!b.empty() && (done[b.back()] || weight[b.back()] != static_cast<Vertex>(top))) b.pop_back();
      if (b.empty()) {
        --top;
        continue;
      }
      v = b.back();
      b.pop_back();
    }
    done[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (done[w]) continue;
      ++weight[w];
      bucket[weight[w]].push_back(w);
      top = std::max(top, static_cast<std::size_t>(weight[w]));
    }
  }
  return order;
}

namespace detail {

/// Shortest x-y path avoiding `blocked` (x and y themselves are allowed).
inline std::optional<VertexSet> shortest_path_avoiding(const Graph& g, Vertex x, Vertex y,
                                                       const std::vector<char>& blocked) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
  std::deque<Vertex> queue{x};
  parent[x] = -1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == y) break;
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] != -2 || (blocked[w] && w != y)) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[y] == -2) return std::nullopt;
  VertexSet path;
  for (Vertex u = y; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Hole through v using its non-adjacent neighbors x and y, if one exists.
inline std::optional<VertexSet> hole_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  blocked[v] = 1;
  for (Vertex w : g.neighbors(v)) blocked[w] = 1;
  blocked[x] = 0;
  auto path = shortest_path_avoiding(g, x, y, blocked);
  if (!path) return std::nullopt;
  VertexSet cycle{v};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return cycle;
}

}  // namespace detail

/// Shortest hole of g by trying every vertex with a pair of non-adjacent
/// neighbors. Quadratic-ish; meant for small graphs and as a fallback.
inline std::optional<VertexSet> shortest_hole_exhaustive(const Graph& g) {
  std::optional<VertexSet> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        auto h = detail::hole_through(g, v, nb[i], nb[j]);
        if (h && (!best || h->size() < best->size())) best = std::move(h);
      }
    }
    if (best && best->size() == 4) break;
  }
  return best;
}

/// Certifying chordality test: maximum cardinality search, then the
/// parent check on the reversed visit order. On failure at vertex v with
/// non-adjacent later neighbors x, y, a shortest x-y path outside N[v]
/// closes a hole.
inline ChordalityCertificate is_chordal(const Graph& g) {
  const Vertex n = g.order();
  VertexSet visit = maximum_cardinality_search(g);
  VertexSet peo(visit.rbegin(), visit.rend());
  std::vector<Vertex> pos(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) pos[peo[i]] = i;

  for (Vertex v : peo) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] <= pos[v] || w == parent || g.adjacent(w, parent)) continue;
      ChordalityCertificate cert;
      cert.chordal = false;
      if (auto h = detail::hole_through(g, v, parent, w); h && is_hole(g, *h)) {
        cert.hole = std::move(*h);
      } else if (auto s = shortest_hole_exhaustive(g)) {
        cert.hole = std::move(*s);
      } else {
        throw std::logic_error("is_chordal: ordering check failed but no hole found");
      }
      return cert;
    }
  }
  ChordalityCertificate cert;
  cert.elimination_order = std::move(peo);
  return cert;
}

/// True iff `order` is a perfect elimination ordering of g.
inline bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  const Vertex n = g.order();
  if (static_cast<Vertex>(order.size()) != n) return false;
  std::vector<Vertex> pos(static_cast<std::size_t>(n), -1);
  for (Vertex i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  for (Vertex v : order) {
    VertexSet later;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    if (!is_clique(g, later)) return false;
  }
  return true;
}

}  // namespace uig

#endif  // UIG_CHORDAL_HPP
