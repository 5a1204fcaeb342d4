#ifndef UIG_ORACLE_HPP
#define UIG_ORACLE_HPP

// Brute-force ground truth. Nothing here touches arc models or the
// recognizers; everything is subset enumeration or exhaustive branching
// on obstructions found by enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "uig/arc_model.hpp"
#include "uig/graph.hpp"

namespace uig {

class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace oracle {

/// Calls f on every k-subset of {0..n-1} in lexicographic order until it
/// returns true. Returns whether f ever did.
inline bool for_each_subset(Vertex n, Vertex k, const std::function<bool(const VertexSet&)>& f) {
  if (k > n || k < 0) return false;
  VertexSet s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    if (f(s)) return true;
    Vertex i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (Vertex j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline bool has_simplicial_elimination(const Graph& g) {
  const Vertex n = g.order();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (Vertex round = 0; round < n; ++round) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (gone[v]) continue;
      VertexSet nb;
      for (Vertex w : g.neighbors(v))
        if (!gone[w]) nb.push_back(w);
      if (is_clique(g, nb)) pick = v;
    }
    if (pick < 0) return false;
    gone[pick] = 1;
  }
  return true;
}

namespace detail {

inline std::size_t induced_edges(const Graph& g, const VertexSet& s, std::vector<int>& deg) {
  deg.assign(s.size(), 0);
  std::size_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) {
        ++deg[i];
        ++deg[j];
        ++m;
      }
  return m;
}

inline bool is_claw_set(const Graph& g, const VertexSet& s) {
  std::vector<int> deg;
  if (induced_edges(g, s, deg) != 3) return false;
  std::sort(deg.begin(), deg.end());
  return deg == std::vector<int>{1, 1, 1, 3};
}

// 9 edges with degrees 4,4,4,2,2,2 forces the tent; 6 edges with degrees
// 3,3,3,1,1,1 forces the net.
inline bool is_tent_or_net_set(const Graph& g, const VertexSet& s) {
  std::vector<int> deg;
  std::size_t m = induced_edges(g, s, deg);
  std::sort(deg.begin(), deg.end());
  return (m == 9 && deg == std::vector<int>{2, 2, 2, 4, 4, 4}) || (m == 6 && deg == std::vector<int>{1, 1, 1, 3, 3, 3});
}

}  // namespace detail

/// A shortest hole, by trying every vertex a with non-adjacent neighbours
/// b, c and a BFS from b to c outside N[a].
inline std::optional<VertexSet> shortest_hole_bruteforce(const Graph& g) {
  std::optional<VertexSet> best;
  const Vertex n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    auto nb = g.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex b = nb[i], c = nb[j];
        if (g.adjacent(b, c)) continue;
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
        std::vector<char> blocked(static_cast<std::size_t>(n), 0);
        blocked[a] = 1;
        for (Vertex w : nb) blocked[w] = 1;
        blocked[c] = 0;
        std::deque<Vertex> q{b};
        parent[b] = -1;
        while (!q.empty() && parent[c] == -2) {
          Vertex u = q.front();
          q.pop_front();
          for (Vertex w : g.neighbors(u)) {
            if (blocked[w] || parent[w] != -2) continue;
            parent[w] = u;
            q.push_back(w);
          }
        }
        if (parent[c] == -2) continue;
        VertexSet cyc{a};
        for (Vertex u = c; u != -1; u = parent[u]) cyc.push_back(u);
        if (!best || cyc.size() < best->size()) best = std::move(cyc);
      }
    }
  }
  return best;
}

/// Vertex set of some claw, tent, net or hole (in that search order).
inline std::optional<VertexSet> find_obstruction_bruteforce(const Graph& g) {
  const Vertex n = g.order();
  VertexSet found;
  if (for_each_subset(n, 4, [&](const VertexSet& s) {
        if (!detail::is_claw_set(g, s)) return false;
        found = s;
        return true;
      })) {
    return found;
  }
  if (for_each_subset(n, 6, [&](const VertexSet& s) {
        if (!detail::is_tent_or_net_set(g, s)) return false;
        found = s;
        return true;
      })) {
    return found;
  }
  return shortest_hole_bruteforce(g);
}

/// Unit interval test by the forbidden subgraph characterisation.
inline bool is_unit_interval_bruteforce(const Graph& g) {
  if (!has_simplicial_elimination(g)) return false;
  const Vertex n = g.order();
  if (for_each_subset(n, 4, [&](const VertexSet& s) { return detail::is_claw_set(g, s); })) return false;
  return !for_each_subset(n, 6, [&](const VertexSet& s) { return detail::is_tent_or_net_set(g, s); });
}

template <typename Set>
struct BruteMinimum {
  std::size_t value = 0;
  Set set;
};

/// Minimum vertex deletion by subsets in cardinality-lexicographic order.
inline BruteMinimum<VertexSet> brute_min_uivd(const Graph& g, Vertex max_n = 12) {
  if (g.order() > max_n) throw GuardError("brute_min_uivd: graph too large");
  for (Vertex k = 0; k <= g.order(); ++k) {
    VertexSet hit;
    if (for_each_subset(g.order(), k, [&](const VertexSet& s) {
          if (!is_unit_interval_bruteforce(without_vertices(g, s))) return false;
          hit = s;
          return true;
        })) {
      return {static_cast<std::size_t>(k), hit};
    }
  }
  throw std::logic_error("brute_min_uivd: unreachable");
}

namespace detail {

inline bool edge_deletion_within(const Graph& g, std::size_t k, EdgeSet& chosen) {
  auto obs = find_obstruction_bruteforce(g);
  if (!obs) return true;
  if (k == 0) return false;
  for (std::size_t i = 0; i < obs->size(); ++i) {
    for (std::size_t j = i + 1; j < obs->size(); ++j) {
      const Vertex a = (*obs)[i], b = (*obs)[j];
      if (!g.adjacent(a, b)) continue;
      const Edge e(a, b);
      chosen.push_back(e);
      if (edge_deletion_within(without_edges(g, std::span<const Edge>(&e, 1)), k - 1, chosen)) return true;
      chosen.pop_back();
    }
  }
  return false;
}

}  // namespace detail

/// Minimum edge deletion. Exhaustive: every solution must delete an edge
/// of each induced obstruction, so branching over the edges of the first
/// one found, with increasing depth, visits a minimum solution.
inline BruteMinimum<EdgeSet> brute_min_uied(const Graph& g, std::size_t max_m = 24) {
  if (g.size() > max_m) throw GuardError("brute_min_uied: graph too large");
  for (std::size_t k = 0;; ++k) {
    EdgeSet chosen;
    if (detail::edge_deletion_within(g, k, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return {k, chosen};
    }
  }
}

struct EditBudget {
  std::size_t k1 = 0, k2 = 0, k3 = 0;
};

struct BruteEditing {
  VertexSet deleted_vertices;
  EdgeSet deleted_edges;  // in input ids
  EdgeSet added_edges;    // in input ids
};

namespace detail {

struct EditState {
  Graph g;
  std::vector<char> gone;           // deleted vertices (kept as isolated)
  std::vector<std::vector<char>> touched;
};

inline Graph alive_part(const EditState& s, VertexSet& to_parent) {
  VertexSet dead;
  for (Vertex v = 0; v < s.g.order(); ++v)
    if (s.gone[v]) dead.push_back(v);
  return without_vertices(s.g, dead, &to_parent);
}

inline bool editing_within(EditState& s, EditBudget b) {
  VertexSet to_parent;
  Graph cur = alive_part(s, to_parent);
  auto obs = find_obstruction_bruteforce(cur);
  if (!obs) return true;
  VertexSet o;
  for (Vertex v : *obs) o.push_back(to_parent[v]);
  if (b.k1 > 0) {
    for (Vertex v : o) {
      s.gone[v] = 1;
      if (editing_within(s, {b.k1 - 1, b.k2, b.k3})) return true;
      s.gone[v] = 0;
    }
  }
  for (int pass = 0; pass < 2; ++pass) {
    const bool deleting = pass == 0;
    if ((deleting ? b.k2 : b.k3) == 0) continue;
    for (std::size_t i = 0; i < o.size(); ++i) {
      for (std::size_t j = i + 1; j < o.size(); ++j) {
        const Vertex x = o[i], y = o[j];
        if (s.g.adjacent(x, y) != deleting || s.touched[x][y]) continue;
        const Edge e(x, y);
        Graph saved = s.g;
        s.g = deleting ? without_edges(s.g, std::span<const Edge>(&e, 1))
                       : edited(s.g, {}, std::span<const Edge>(&e, 1));
        s.touched[x][y] = s.touched[y][x] = 1;
        EditBudget nb = b;
        (deleting ? nb.k2 : nb.k3) -= 1;
        if (editing_within(s, nb)) return true;
        s.touched[x][y] = s.touched[y][x] = 0;
        s.g = std::move(saved);
      }
    }
  }
  return false;
}

}  // namespace detail

/// Exhaustive editing decision: some (V-, E-, E+) within the budget turns g
/// into a unit interval graph. Complete because every solution must delete
/// a vertex of, or edit a pair inside, each induced obstruction.
inline std::optional<BruteEditing> brute_min_editing(const Graph& g, EditBudget b, Vertex max_n = 8) {
  if (g.order() > max_n) throw GuardError("brute_min_editing: graph too large");
  detail::EditState s{g, std::vector<char>(static_cast<std::size_t>(g.order()), 0),
                      std::vector<std::vector<char>>(static_cast<std::size_t>(g.order()),
                                                     std::vector<char>(static_cast<std::size_t>(g.order()), 0))};
  if (!detail::editing_within(s, b)) return std::nullopt;
  BruteEditing out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (s.gone[v]) out.deleted_vertices.push_back(v);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (s.gone[u]) continue;
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (s.gone[v]) continue;
      bool before = g.adjacent(u, v), after = s.g.adjacent(u, v);
      if (before && !after) out.deleted_edges.emplace_back(u, v);
      if (!before && after) out.added_edges.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

struct GeneratedPhcag {
  Graph graph;
  ArcModel model;
};

/// Random connected non-chordal proper Helly circular-arc graph with a
/// verified canonical model. Arcs are shorter than a third of the circle,
/// so no three of them cover it and the model is Helly; nesting caused by
/// length jitter is rejected.
inline GeneratedPhcag random_phcag(Vertex n, std::uint64_t seed, int max_tries = 100000) {
  if (n < 4) throw std::invalid_argument("random_phcag: n must be at least 4");
  std::mt19937_64 rng(seed);
  const std::int64_t perimeter = std::int64_t{1} << 40;
  const std::int64_t cap = perimeter / 3 - 1;
  std::uniform_int_distribution<std::int64_t> point(0, perimeter - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const double step = static_cast<double>(perimeter) / n;
    const double top = std::min(4.5, static_cast<double>(cap) / step);
    const double density = 1.05 + (top - 1.05) * unit(rng);
    const double jitter = unit(rng) < 0.5 ? 0.0 : unit(rng);
    const std::int64_t offset = point(rng);
    std::vector<std::int64_t> start(static_cast<std::size_t>(n)), end(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      start[v] = static_cast<std::int64_t>((v + unit(rng)) * step);
      end[v] = start[v] + static_cast<std::int64_t>(step * density * (1.0 + jitter * (2.0 * unit(rng) - 1.0)));
    }
    // ends sorted along the starts: no arc contains another
    std::sort(end.begin(), end.end());
    BasicArcModel<std::int64_t> raw;
    raw.perimeter = perimeter;
    bool fits = true;
    for (Vertex v = 0; v < n; ++v) {
      const std::int64_t len = end[v] - start[v];
      if (len < 1 || len > cap) fits = false;
      raw.arcs.push_back({(start[v] + offset) % perimeter, (end[v] + offset) % perimeter});
    }
    if (!fits) continue;
    std::shuffle(raw.arcs.begin(), raw.arcs.end(), rng);
    ArcModel m;
    try {
      m = canonicalize(raw);
    } catch (const ModelError&) {
      continue;
    }
    Graph g = represented_graph(m);
    if (!is_connected(g) || has_simplicial_elimination(g)) continue;
    ModelCheck c = verify_model(g, m);
    if (!c.ok()) continue;
    return {std::move(g), std::move(m)};
  }
  throw std::runtime_error("random_phcag: rejection budget exhausted");
}

/// Canonical model of the plain hole C_n: arc i is [2i - 1, 2i + 2] mod 2n.
inline ArcModel cycle_model(Vertex n) {
  ArcModel m;
  m.perimeter = 2 * static_cast<std::int64_t>(n);
  for (std::int64_t i = 0; i < n; ++i) {
    m.arcs.push_back({(2 * i - 1 + m.perimeter) % m.perimeter, (2 * i + 2) % m.perimeter});
  }
  return m;
}

/// Random unit interval graph from unit intervals with random left ends.
inline Graph random_unit_interval(Vertex n, std::uint64_t seed, double spread = 0.0) {
  std::mt19937_64 rng(seed);
  if (spread <= 0.0) spread = std::max(1.0, n / 3.0);
  std::uniform_real_distribution<double> left(0.0, spread);
  std::vector<double> l(static_cast<std::size_t>(n));
  for (auto& x : l) x = left(rng);
  EdgeSet es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (std::abs(l[i] - l[j]) <= 1.0) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

struct PerturbedInstance {
  Graph graph;
  Graph planted;   // unit interval graph before the edits
  EdgeSet flipped; // pairs whose adjacency was toggled
};

/// A random unit interval graph with `edits` random pairs toggled.
/// Toggling them back, or deleting one end of each, restores a unit
/// interval graph, so `edits` bounds every optimum from above.
inline PerturbedInstance perturbed(Vertex n, std::uint64_t seed, Vertex edits) {
  Graph base = random_unit_interval(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  EdgeSet flipped;
  while (static_cast<Vertex>(flipped.size()) < edits && n >= 2) {
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    Edge e(a, b);
    if (std::find(flipped.begin(), flipped.end(), e) != flipped.end()) continue;
    flipped.push_back(e);
  }
  std::sort(flipped.begin(), flipped.end());
  EdgeSet del, add;
  for (const Edge& e : flipped) (base.adjacent(e.u, e.v) ? del : add).push_back(e);
  return {edited(base, del, add), base, flipped};
}

}  // namespace oracle
}  // namespace uig

#endif  // UIG_ORACLE_HPP
