#ifndef UIG_PROPER_INTERVAL_HPP
#define UIG_PROPER_INTERVAL_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "uig/arc_model.hpp"
#include "uig/graph.hpp"

namespace uig {

/// Lexicographic breadth-first search by partition refinement. Ties are
/// broken in favour of the vertex that comes *last* in `tie_order` (the
/// LexBFS+ rule); pass an empty span for plain LexBFS from vertex order.
inline VertexSet lex_bfs(const Graph& g, std::span<const Vertex> tie_order = {}) {
  const Vertex n = g.order();
  if (n == 0) return {};
  // Initial sequence: the first element is picked first.
  VertexSet init;
  if (tie_order.empty()) {
    init.resize(static_cast<std::size_t>(n));
    std::iota(init.begin(), init.end(), 0);
  } else {
    init.assign(tie_order.rbegin(), tie_order.rend());
  }
  std::vector<Vertex> rank(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) rank[init[i]] = i;

  // neighbour lists in rank order, flattened
  std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) start[v + 1] = start[v] + g.degree(v);
  std::vector<Vertex> nbr(start[n]);
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (Vertex v : init) {
    for (Vertex w : g.neighbors(v)) nbr[fill[w]++] = v;
  }

  struct Cell {
    Vertex head = -1, tail = -1, size = 0;
    Vertex prev = -1, next = -1;
    Vertex split = -1, stamp = -1;
  };
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n) + 2 * g.size() + 1);
  std::vector<Vertex> vnext(static_cast<std::size_t>(n), -1), vprev(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> cell_of(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  cells.push_back({});
  for (Vertex v : init) {
    Cell& c = cells[0];
    vprev[v] = c.tail;
    if (c.tail >= 0) vnext[c.tail] = v; else c.head = v;
    c.tail = v;
    ++c.size;
  }
  Vertex first = 0;

  auto unlink_vertex = [&](Vertex v) {
    Cell& c = cells[cell_of[v]];
    if (vprev[v] >= 0) vnext[vprev[v]] = vnext[v]; else c.head = vnext[v];
    if (vnext[v] >= 0) vprev[vnext[v]] = vprev[v]; else c.tail = vprev[v];
    vprev[v] = vnext[v] = -1;
    --c.size;
  };
  auto drop_if_empty = [&](Vertex id) {
    Cell& c = cells[id];
    if (c.size > 0) return;
    if (c.prev >= 0) cells[c.prev].next = c.next; else first = c.next;
    if (c.next >= 0) cells[c.next].prev = c.prev;
  };

  VertexSet order;
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex step = 0; step < n; ++step) {
    const Vertex v = cells[first].head;
    const Vertex from = first;
    unlink_vertex(v);
    drop_if_empty(from);
    done[v] = 1;
    order.push_back(v);
    for (std::size_t at = start[v]; at < start[v + 1]; ++at) {
      const Vertex w = nbr[at];
      if (done[w]) continue;
      const Vertex old = cell_of[w];
      if (cells[old].stamp != step) {
        cells[old].stamp = step;
        const auto id = static_cast<Vertex>(cells.size());
        Cell fresh;
        fresh.next = old;
        fresh.prev = cells[old].prev;
        fresh.stamp = step;
        cells.push_back(fresh);
        if (cells[id].prev >= 0) cells[cells[id].prev].next = id; else first = id;
        cells[old].prev = id;
        cells[old].split = id;
      }
      const Vertex target = cells[old].split;
      unlink_vertex(w);
      Cell& t = cells[target];
      vprev[w] = t.tail;
      if (t.tail >= 0) vnext[t.tail] = w; else t.head = w;
      t.tail = w;
      ++t.size;
      cell_of[w] = target;
      drop_if_empty(old);
    }
  }
  return order;
}

/// Closed-neighbourhood span of every vertex in `order`, as positions.
struct NeighborhoodSpans {
  std::vector<Vertex> left, right;  // indexed by position
};

inline NeighborhoodSpans neighborhood_spans(const Graph& g, std::span<const Vertex> order) {
  const auto n = static_cast<Vertex>(order.size());
  std::vector<Vertex> pos(static_cast<std::size_t>(g.order()), -1);
  for (Vertex i = 0; i < n; ++i) pos[order[i]] = i;
  NeighborhoodSpans s;
  s.left.resize(static_cast<std::size_t>(n));
  s.right.resize(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) {
    Vertex lo = i, hi = i;
    for (Vertex w : g.neighbors(order[i])) {
      if (pos[w] < 0) continue;
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    s.left[i] = lo;
    s.right[i] = hi;
  }
  return s;
}

/// True iff every closed neighbourhood is a contiguous block of `order` and
/// both block ends are non-decreasing along it.
inline bool is_umbrella_ordering(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<Vertex>(order.size()) != g.order()) return false;
  auto s = neighborhood_spans(g, order);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (static_cast<std::size_t>(s.right[i] - s.left[i]) != g.degree(order[i])) return false;
    if (i > 0 && (s.left[i] < s.left[i - 1] || s.right[i] < s.right[i - 1])) return false;
  }
  return true;
}

/// Three LexBFS sweeps per component; the last sweep is an umbrella
/// ordering exactly when g is a proper interval graph.
inline VertexSet three_sweep_ordering(const Graph& g) {
  VertexSet out;
  out.reserve(static_cast<std::size_t>(g.order()));
  auto comps = connected_components(g);
  if (comps.size() == 1) {
    VertexSet s1 = lex_bfs(g);
    VertexSet s2 = lex_bfs(g, s1);
    return lex_bfs(g, s2);
  }
  for (const VertexSet& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    VertexSet s1 = lex_bfs(sub.graph);
    VertexSet s2 = lex_bfs(sub.graph, s1);
    VertexSet s3 = lex_bfs(sub.graph, s2);
    for (Vertex v : s3) out.push_back(sub.parent(v));
  }
  return out;
}

/// Proper interval model from an umbrella ordering: vertex i of the order
/// gets [2n i, 2n r(i) + n + i], with endpoints then ranked 0..2n-1. Left
/// ends and right ends both increase along the order, so ranking is a merge.
inline IntervalModel interval_model_from_ordering(const Graph& g, std::span<const Vertex> order) {
  const auto n = static_cast<std::int64_t>(order.size());
  auto s = neighborhood_spans(g, order);
  IntervalModel im;
  im.intervals.resize(order.size());
  std::int64_t li = 0, ri = 0, rank = 0;
  while (ri < n) {
    if (li < n && 2 * n * li <= 2 * n * s.right[ri] + n + ri) {
      im.intervals[order[li++]].lp = rank++;
    } else {
      im.intervals[order[ri++]].rp = rank++;
    }
  }
  return im;
}

struct ProperIntervalResult {
  VertexSet order;                      // umbrella ordering when recognised
  std::optional<IntervalModel> model;   // empty when g is not proper interval
};

/// Proper interval (= unit interval) recognition without certificates of
/// failure. g is expected to be chordal for the answer to be meaningful;
/// the umbrella test itself rejects every non-proper-interval graph.
inline ProperIntervalResult recognize_proper_interval(const Graph& g) {
  ProperIntervalResult r;
  r.order = three_sweep_ordering(g);
  if (is_umbrella_ordering(g, r.order)) r.model = interval_model_from_ordering(g, r.order);
  return r;
}

}  // namespace uig

#endif  // UIG_PROPER_INTERVAL_HPP
