#ifndef UIG_WITNESS_HPP
#define UIG_WITNESS_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uig/chordal.hpp"
#include "uig/graph.hpp"

namespace uig {

enum class WitnessKind { Claw, S3, S3Bar, C4, C5, Hole, W4, W5, C6Bar, CStar };

/// Certificate of non-membership: an induced copy of a named pattern.
///
/// Vertex conventions (input ids):
///   Claw   [center, a, b, c]
///   S3     [v1, v2, v3, u1, u2, u3]  triangle v, u_i adjacent to v_j for j != i
///   S3Bar  [u1, u2, u3, v1, v2, v3]  triangle u, pendant v_i on u_i
///   C4, C5, Hole   the cycle in cyclic order
///   W4, W5 rim in cyclic order, then the hub
///   C6Bar  [a1, a2, a3, b1, b2, b3]  triangles a and b, a_i adjacent to b_i
///   CStar  hole in cyclic order, then a vertex adjacent to none of it
struct ForbiddenWitness {
  WitnessKind kind = WitnessKind::Claw;
  VertexSet vertices;
  bool operator==(const ForbiddenWitness&) const = default;
};

inline std::string_view witness_tag(WitnessKind k) {
  switch (k) {
    case WitnessKind::Claw: return "Claw";
    case WitnessKind::S3: return "S3";
    case WitnessKind::S3Bar: return "S3Bar";
    case WitnessKind::C4: return "C4";
    case WitnessKind::C5: return "C5";
    case WitnessKind::Hole: return "Hole";
    case WitnessKind::W4: return "W4";
    case WitnessKind::W5: return "W5";
    case WitnessKind::C6Bar: return "C6Bar";
    case WitnessKind::CStar: return "CStar";
  }
  return "?";
}

inline std::optional<WitnessKind> witness_kind_from_tag(std::string_view tag) {
  for (auto k : {WitnessKind::Claw, WitnessKind::S3, WitnessKind::S3Bar, WitnessKind::C4, WitnessKind::C5,
                 WitnessKind::Hole, WitnessKind::W4, WitnessKind::W5, WitnessKind::C6Bar, WitnessKind::CStar}) {
    if (witness_tag(k) == tag) return k;
  }
  return std::nullopt;
}

/// Edge list of the labelled pattern for kinds with a fixed size.
inline std::optional<Graph> pattern_graph(WitnessKind k) {
  switch (k) {
    case WitnessKind::Claw: return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    case WitnessKind::S3:
      return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 1}, {3, 2}, {4, 0}, {4, 2}, {5, 0}, {5, 1}});
    case WitnessKind::S3Bar: return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    case WitnessKind::C6Bar:
      return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    default: return std::nullopt;
  }
}

namespace detail {

inline bool distinct_in_range(const Graph& g, std::span<const Vertex> vs) {
  VertexSet s(vs.begin(), vs.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v >= 0 && v < g.order(); });
}

inline bool matches_labelled(const Graph& g, std::span<const Vertex> vs, const Graph& pattern) {
  if (static_cast<Vertex>(vs.size()) != pattern.order()) return false;
  for (Vertex i = 0; i < pattern.order(); ++i) {
    for (Vertex j = i + 1; j < pattern.order(); ++j) {
      if (g.adjacent(vs[i], vs[j]) != pattern.adjacent(i, j)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// True iff the listed vertices induce the named pattern under the
/// documented vertex convention.
inline bool verify_witness(const Graph& g, const ForbiddenWitness& w) {
  const auto& vs = w.vertices;
  if (!detail::distinct_in_range(g, vs)) return false;
  if (auto p = pattern_graph(w.kind)) return detail::matches_labelled(g, vs, *p);
  const std::span<const Vertex> all(vs);
  switch (w.kind) {
    case WitnessKind::C4: return vs.size() == 4 && is_hole(g, all);
    case WitnessKind::C5: return vs.size() == 5 && is_hole(g, all);
    case WitnessKind::Hole: return is_hole(g, all);
    case WitnessKind::W4:
    case WitnessKind::W5: {
      const std::size_t rim = w.kind == WitnessKind::W4 ? 4 : 5;
      if (vs.size() != rim + 1 || !is_hole(g, all.first(rim))) return false;
      return std::all_of(vs.begin(), vs.end() - 1, [&](Vertex v) { return g.adjacent(v, vs.back()); });
    }
    case WitnessKind::CStar: {
      if (vs.size() < 5 || !is_hole(g, all.first(vs.size() - 1))) return false;
      return std::none_of(vs.begin(), vs.end() - 1, [&](Vertex v) { return g.adjacent(v, vs.back()); });
    }
    default: return false;
  }
}

inline std::string to_string(const ForbiddenWitness& w) {
  std::string s = "WITNESS ";
  s += witness_tag(w.kind);
  for (Vertex v : w.vertices) s += " " + std::to_string(v);
  return s;
}

// ---------------------------------------------------------------------------
// Pattern search. These are exact searches, polynomial of small degree;
// they are used on failure paths and in tests.

namespace detail {

inline VertexSet common_neighbors(const Graph& g, Vertex a, Vertex b) {
  VertexSet out;
  auto na = g.neighbors(a), nb = g.neighbors(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

// Calls f(a, b, c) for every triangle with a < b < c until f returns true.
template <typename F>
bool for_each_triangle(const Graph& g, F&& f) {
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : common_neighbors(g, a, b)) {
        if (c > b && f(a, b, c)) return true;
      }
    }
  }
  return false;
}

// Picks one vertex per candidate list, pairwise distinct and satisfying
// `ok(x, y)` for every chosen pair.
template <typename Ok>
std::optional<std::array<Vertex, 3>> pick_three(const std::array<VertexSet, 3>& cand, Ok&& ok) {
  for (Vertex x : cand[0]) {
    for (Vertex y : cand[1]) {
      if (y == x || !ok(x, y)) continue;
      for (Vertex z : cand[2]) {
        if (z != x && z != y && ok(x, z) && ok(y, z)) return std::array<Vertex, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<ForbiddenWitness> find_claw(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return ForbiddenWitness{WitnessKind::Claw, {v, nb[i], nb[j], nb[k]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ForbiddenWitness> find_net(const Graph& g) {
  std::optional<ForbiddenWitness> out;
  detail::for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    const std::array<Vertex, 3> t{a, b, c};
    std::array<VertexSet, 3> cand;
    for (int i = 0; i < 3; ++i) {
      for (Vertex w : g.neighbors(t[i])) {
        if (!g.adjacent(w, t[(i + 1) % 3]) && !g.adjacent(w, t[(i + 2) % 3]) && w != t[(i + 1) % 3] &&
            w != t[(i + 2) % 3]) {
          cand[i].push_back(w);
        }
      }
    }
    auto p = detail::pick_three(cand, [&](Vertex x, Vertex y) { return !g.adjacent(x, y); });
    if (!p) return false;
    out = ForbiddenWitness{WitnessKind::S3Bar, {a, b, c, (*p)[0], (*p)[1], (*p)[2]}};
    return true;
  });
  return out;
}

inline std::optional<ForbiddenWitness> find_tent(const Graph& g) {
  std::optional<ForbiddenWitness> out;
  detail::for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    const std::array<Vertex, 3> t{a, b, c};
    std::array<VertexSet, 3> cand;
    for (int i = 0; i < 3; ++i) {
      for (Vertex w : detail::common_neighbors(g, t[(i + 1) % 3], t[(i + 2) % 3])) {
        if (w != t[i] && !g.adjacent(w, t[i])) cand[i].push_back(w);
      }
    }
    auto p = detail::pick_three(cand, [&](Vertex x, Vertex y) { return !g.adjacent(x, y); });
    if (!p) return false;
    out = ForbiddenWitness{WitnessKind::S3, {a, b, c, (*p)[0], (*p)[1], (*p)[2]}};
    return true;
  });
  return out;
}

/// A 4-hole (C4) among the vertices flagged in `in`.
inline std::optional<VertexSet> find_c4(const Graph& g, const std::vector<char>& in) {
  for (Vertex a = 0; a < g.order(); ++a) {
    if (!in[a]) continue;
    for (Vertex c = a + 1; c < g.order(); ++c) {
      if (!in[c] || g.adjacent(a, c)) continue;
      VertexSet mid;
      for (Vertex w : detail::common_neighbors(g, a, c)) {
        if (in[w]) mid.push_back(w);
      }
      for (std::size_t i = 0; i < mid.size(); ++i) {
        for (std::size_t j = i + 1; j < mid.size(); ++j) {
          if (!g.adjacent(mid[i], mid[j])) return VertexSet{a, mid[i], c, mid[j]};
        }
      }
    }
  }
  return std::nullopt;
}

/// A 5-hole among the vertices flagged in `in`.
inline std::optional<VertexSet> find_c5(const Graph& g, const std::vector<char>& in) {
  for (Vertex a = 0; a < g.order(); ++a) {
    if (!in[a]) continue;
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (!in[b]) continue;
      for (Vertex e : na) {
        if (e <= b || !in[e] || g.adjacent(b, e)) continue;
        for (Vertex c : g.neighbors(b)) {
          if (!in[c] || c == a || g.adjacent(c, a) || g.adjacent(c, e)) continue;
          for (Vertex d : g.neighbors(e)) {
            if (!in[d] || d == a || d == c || g.adjacent(d, a) || g.adjacent(d, b)) continue;
            if (g.adjacent(c, d)) return VertexSet{a, b, c, d, e};
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<VertexSet> find_c4(const Graph& g) {
  return find_c4(g, std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

inline std::optional<VertexSet> find_c5(const Graph& g) {
  return find_c5(g, std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

inline std::optional<ForbiddenWitness> find_wheel(const Graph& g, int rim) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex h = 0; h < g.order(); ++h) {
    auto nb = g.neighbors(h);
    for (Vertex w : nb) in[w] = 1;
    auto c = rim == 4 ? find_c4(g, in) : find_c5(g, in);
    for (Vertex w : nb) in[w] = 0;
    if (c) {
      c->push_back(h);
      return ForbiddenWitness{rim == 4 ? WitnessKind::W4 : WitnessKind::W5, std::move(*c)};
    }
  }
  return std::nullopt;
}

inline std::optional<ForbiddenWitness> find_c6_complement(const Graph& g) {
  std::optional<ForbiddenWitness> out;
  detail::for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    const std::array<Vertex, 3> t{a, b, c};
    std::array<VertexSet, 3> cand;
    for (int i = 0; i < 3; ++i) {
      for (Vertex w : g.neighbors(t[i])) {
        if (w != t[(i + 1) % 3] && w != t[(i + 2) % 3] && !g.adjacent(w, t[(i + 1) % 3]) &&
            !g.adjacent(w, t[(i + 2) % 3])) {
          cand[i].push_back(w);
        }
      }
    }
    auto p = detail::pick_three(cand, [&](Vertex x, Vertex y) { return g.adjacent(x, y); });
    if (!p) return false;
    out = ForbiddenWitness{WitnessKind::C6Bar, {a, b, c, (*p)[0], (*p)[1], (*p)[2]}};
    return true;
  });
  return out;
}

/// A hole plus a vertex adjacent to none of it: a hole of G - N[v].
inline std::optional<ForbiddenWitness> find_c_star(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet closed(g.neighbors(v).begin(), g.neighbors(v).end());
    closed.push_back(v);
    VertexSet to_parent;
    Graph rest = without_vertices(g, closed, &to_parent);
    auto cert = is_chordal(rest);
    if (cert.chordal) continue;
    VertexSet vs;
    for (Vertex x : cert.hole) vs.push_back(to_parent[x]);
    vs.push_back(v);
    return ForbiddenWitness{WitnessKind::CStar, std::move(vs)};
  }
  return std::nullopt;
}

/// The first obstruction among claw, net, tent, W4, W5, complement of C6
/// and C*, searched in that order.
inline std::optional<ForbiddenWitness> find_phcag_obstruction(const Graph& g) {
  if (auto w = find_claw(g)) return w;
  if (auto w = find_net(g)) return w;
  if (auto w = find_tent(g)) return w;
  if (auto w = find_wheel(g, 4)) return w;
  if (auto w = find_wheel(g, 5)) return w;
  if (auto w = find_c6_complement(g)) return w;
  return find_c_star(g);
}

}  // namespace uig

#endif  // UIG_WITNESS_HPP
