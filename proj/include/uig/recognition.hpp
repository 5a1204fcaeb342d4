#ifndef UIG_RECOGNITION_HPP
#define UIG_RECOGNITION_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "uig/arc_model.hpp"
#include "uig/chordal.hpp"
#include "uig/graph.hpp"
#include "uig/proper_interval.hpp"
#include "uig/witness.hpp"

namespace uig {

/// Six cliques K0..K4 (the fat hole, in cyclic order) and the hub.
struct FatW5 {
  std::array<VertexSet, 5> hole;
  VertexSet hub;
  bool operator==(const FatW5&) const = default;
};

using PhcagOutcome = std::variant<ArcModel, ForbiddenWitness>;
using RecognitionOutcome = std::variant<ArcModel, ForbiddenWitness, FatW5>;

/// Partition check: every class non-empty and a clique, K_i complete to
/// K_{i+-1} and the hub, anticomplete to K_{i+-2}.
inline bool verify_fat_w5(const Graph& g, const FatW5& f) {
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  auto assign = [&](const VertexSet& s, int id) {
    if (s.empty()) return false;
    for (Vertex v : s) {
      if (v < 0 || v >= g.order() || cls[v] >= 0) return false;
      cls[v] = id;
    }
    return true;
  };
  for (int i = 0; i < 5; ++i) {
    if (!assign(f.hole[i], i)) return false;
  }
  if (!assign(f.hub, 5)) return false;
  if (std::count(cls.begin(), cls.end(), -1) != 0) return false;
  auto should_touch = [](int a, int b) {
    if (a == b || a == 5 || b == 5) return true;
    int d = (a - b + 5) % 5;
    return d == 1 || d == 4;
  };
  std::array<std::array<std::size_t, 6>, 6> pairs{};
  for (const Edge& e : g.edges()) {
    if (!should_touch(cls[e.u], cls[e.v])) return false;
    ++pairs[cls[e.u]][cls[e.v]];
    if (cls[e.u] != cls[e.v]) ++pairs[cls[e.v]][cls[e.u]];
  }
  auto size_of = [&](int i) { return i == 5 ? f.hub.size() : f.hole[i].size(); };
  for (int a = 0; a < 6; ++a) {
    for (int b = a; b < 6; ++b) {
      if (!should_touch(a, b)) continue;
      std::size_t want = a == b ? size_of(a) * (size_of(a) - 1) / 2 : size_of(a) * size_of(b);
      if (pairs[a][b] != want) return false;
    }
  }
  return true;
}

namespace detail {

/// Canonical arc model from a circular order in which arcs start (and,
/// being proper, end). Arc i reaches over the longest run of successors
/// adjacent to it; its cp goes into the gap after the last of them.
inline ArcModel layout_circular_order(const Graph& g, std::span<const Vertex> pi) {
  const auto n = static_cast<Vertex>(pi.size());
  std::vector<Vertex> reach(static_cast<std::size_t>(n));
  std::vector<VertexSet> gap(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) {
    Vertex f = 0;
    while (f + 1 < n && g.adjacent(pi[i], pi[(i + f + 1) % n])) ++f;
    reach[i] = f;
    gap[(i + f) % n].push_back(i);
  }
  ArcModel m;
  m.perimeter = 2 * static_cast<std::int64_t>(n);
  m.arcs.resize(static_cast<std::size_t>(n));
  std::int64_t pos = 0;
  for (Vertex k = 0; k < n; ++k) {
    m.arcs[pi[k]].ccp = pos++;
    auto& ends = gap[k];
    std::sort(ends.begin(), ends.end(), [&](Vertex a, Vertex b) { return reach[a] > reach[b]; });
    for (Vertex i : ends) m.arcs[pi[i]].cp = pos++;
  }
  return m;
}

/// Orientation of the edges of a twin-free graph in which, for every
/// vertex, the in- and the out-neighbourhood are cliques: for non-adjacent
/// neighbours a, b of v, exactly one of va, vb leaves v. Solved as a
/// 2-colouring; returns the colour (1 = u -> v for edge (u < v)) and the
/// component of every edge, or nothing when the constraints are odd.
struct LocalTournament {
  EdgeSet edges;
  std::vector<char> forward;
  std::vector<Vertex> component;
  Vertex components = 0;
};

inline std::optional<LocalTournament> local_tournament(const Graph& g) {
  LocalTournament t;
  t.edges = g.edges();
  const auto m = static_cast<Vertex>(t.edges.size());
  auto edge_id = [&](Vertex a, Vertex b) {
    Edge e(a, b);
    return static_cast<Vertex>(std::lower_bound(t.edges.begin(), t.edges.end(), e) - t.edges.begin());
  };
  // constraint: out(v, a) != out(v, b); out(v, a) = colour(va) xor (v > a)
  struct Link {
    Vertex to;
    char parity;  // colour(to) = colour(from) xor parity
  };
  std::vector<std::vector<Link>> links(static_cast<std::size_t>(m));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        Vertex ea = edge_id(v, nb[i]), eb = edge_id(v, nb[j]);
        char parity = static_cast<char>(1 ^ (v > nb[i]) ^ (v > nb[j]));
        links[ea].push_back({eb, parity});
        links[eb].push_back({ea, parity});
      }
    }
  }
  t.forward.assign(static_cast<std::size_t>(m), 0);
  t.component.assign(static_cast<std::size_t>(m), -1);
  VertexSet stack;
  for (Vertex s = 0; s < m; ++s) {
    if (t.component[s] >= 0) continue;
    t.component[s] = t.components;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex e = stack.back();
      stack.pop_back();
      for (const Link& l : links[e]) {
        char want = static_cast<char>(t.forward[e] ^ l.parity);
        if (t.component[l.to] < 0) {
          t.component[l.to] = t.components;
          t.forward[l.to] = want;
          stack.push_back(l.to);
        } else if (t.forward[l.to] != want) {
          return std::nullopt;
        }
      }
    }
    ++t.components;
  }
  return t;
}

/// Round enumeration from a local tournament orientation: the successor of
/// v is the out-neighbour that beats every other out-neighbour.
inline std::optional<VertexSet> successor_walk(const Graph& g, const LocalTournament& t,
                                               const std::vector<char>& flip) {
  const Vertex n = g.order();
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const Edge& e = t.edges[i];
    if (t.forward[i] ^ flip[t.component[i]]) {
      out[e.u].push_back(e.v);
    } else {
      out[e.v].push_back(e.u);
    }
  }
  std::vector<Vertex> succ(static_cast<std::size_t>(n), -1);
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : out[v]) in_set[u] = 1;
    for (Vertex u : out[v]) {
      // u is the source iff every other out-neighbour of v is an out-neighbour of u
      std::size_t beaten = 0;
      for (Vertex w : out[u]) beaten += in_set[w];
      if (beaten + 1 == out[v].size()) {
        succ[v] = u;
        break;
      }
    }
    for (Vertex u : out[v]) in_set[u] = 0;
    if (succ[v] < 0) return std::nullopt;
  }
  VertexSet pi{0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  for (Vertex v = succ[0]; v != 0; v = succ[v]) {
    if (seen[v]) return std::nullopt;
    seen[v] = 1;
    pi.push_back(v);
  }
  if (static_cast<Vertex>(pi.size()) != n) return std::nullopt;
  return pi;
}

inline std::optional<ArcModel> construct_non_chordal_model(const Graph& g) {
  auto classes = twin_partition(g);
  std::vector<Vertex> cls(static_cast<std::size_t>(g.order()));
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Vertex v : classes[c]) cls[v] = static_cast<Vertex>(c);
  EdgeSet qe;
  for (const Edge& e : g.edges())
    if (cls[e.u] != cls[e.v]) qe.emplace_back(cls[e.u], cls[e.v]);
  Graph q = Graph::from_edges_dedup(static_cast<Vertex>(classes.size()), std::move(qe));

  auto t = local_tournament(q);
  if (!t) return std::nullopt;
  // A global reversal mirrors the model, so the first component stays put.
  const Vertex free_components = std::max<Vertex>(t->components - 1, 0);
  const std::uint64_t tries = free_components > 12 ? 4096 : std::uint64_t{1} << free_components;
  std::vector<char> flip(static_cast<std::size_t>(t->components), 0);
  for (std::uint64_t mask = 0; mask < tries; ++mask) {
    for (Vertex c = 1; c < t->components; ++c) flip[c] = static_cast<char>((mask >> ((c - 1) % 63)) & 1);
    auto order = successor_walk(q, *t, flip);
    if (!order) continue;
    VertexSet pi;
    pi.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex c : *order) pi.insert(pi.end(), classes[c].begin(), classes[c].end());
    ArcModel m = layout_circular_order(g, pi);
    if (verify_model(g, m).ok()) return m;
  }
  return std::nullopt;
}

}  // namespace detail

/// Certifying recognition of proper Helly circular-arc graphs on connected
/// input. Returns a verified canonical model or an obstruction (claw, net,
/// tent, W4, W5, complement of C6, or a hole plus a vertex missing it).
inline PhcagOutcome recognize_phcag(const Graph& g) {
  if (!is_connected(g)) throw GraphError("recognize_phcag: graph is disconnected");
  if (g.order() == 0) return ArcModel{};
  auto chordal = is_chordal(g);
  if (chordal.chordal) {
    auto pi = recognize_proper_interval(g);
    if (pi.model) return as_arc_model(*pi.model);
  } else if (auto m = detail::construct_non_chordal_model(g)) {
    return *m;
  }
  if (auto w = find_phcag_obstruction(g)) return *w;
  throw std::logic_error("recognize_phcag: no model and no obstruction found");
}

namespace detail {

inline ForbiddenWitness claw_or_net_from_path(const Graph& g, std::span<const Vertex> hole, Vertex v) {
  const auto len = static_cast<Vertex>(hole.size());
  std::vector<Vertex> at(static_cast<std::size_t>(g.order()), -1);
  for (Vertex i = 0; i < len; ++i) at[hole[i]] = i;
  // BFS from v until the hole is reached: v ... x y h_i.
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
  std::deque<Vertex> queue{v};
  parent[v] = -1;
  Vertex hit = -1;
  while (!queue.empty() && hit < 0) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] != -2) continue;
      parent[w] = u;
      if (at[w] >= 0) {
        hit = w;
        break;
      }
      queue.push_back(w);
    }
  }
  if (hit < 0) throw GraphError("recognize_f_free: graph is disconnected");
  const Vertex y = parent[hit];
  const Vertex x = parent[y];  // v itself on a two-edge path; otherwise x stands in for v
  VertexSet on;  // indices of y's neighbours on the hole
  for (Vertex w : g.neighbors(y)) {
    if (at[w] >= 0) on.push_back(at[w]);
  }
  std::sort(on.begin(), on.end());
  auto h = [&](Vertex i) { return hole[((i % len) + len) % len]; };
  if (on.size() == 1) {
    const Vertex i = on[0];
    return {WitnessKind::Claw, {h(i), y, h(i - 1), h(i + 1)}};
  }
  if (on.size() == 2 && ((on[1] - on[0]) == 1 || (on[0] == 0 && on[1] == len - 1))) {
    const Vertex i = on[1] - on[0] == 1 ? on[0] : len - 1;
    return {WitnessKind::S3Bar, {y, h(i), h(i + 1), x, h(i - 1), h(i + 2)}};
  }
  for (std::size_t a = 0; a < on.size(); ++a) {
    for (std::size_t b = a + 1; b < on.size(); ++b) {
      const Vertex d = on[b] - on[a];
      if (d != 1 && d != len - 1) return {WitnessKind::Claw, {y, x, hole[on[a]], hole[on[b]]}};
    }
  }
  throw std::logic_error("recognize_f_free: inconsistent hole neighbourhood");
}

inline RecognitionOutcome grow_fat_w5(const Graph& g, const VertexSet& w5) {
  const Vertex hub = w5[5];
  auto h = [&](int i) { return w5[((i % 5) + 5) % 5]; };
  FatW5 f;
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < 5; ++i) {
    f.hole[i] = {w5[i]};
    cls[w5[i]] = i;
  }
  f.hub = {hub};
  cls[hub] = 5;
  auto members = [&](int c) -> VertexSet& { return c == 5 ? f.hub : f.hole[((c % 5) + 5) % 5]; };
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);

  for (Vertex x = 0; x < g.order(); ++x) {
    if (cls[x] >= 0 && std::find(w5.begin(), w5.end(), x) != w5.end()) continue;
    std::array<int, 6> cnt{};
    std::array<bool, 5> on{};
    int on_count = 0;
    for (Vertex w : g.neighbors(x)) {
      mark[w] = 1;
      if (cls[w] >= 0) ++cnt[cls[w]];
    }
    for (int i = 0; i < 5; ++i) {
      on[i] = mark[h(i)];
      on_count += on[i];
    }
    auto clear = [&] {
      for (Vertex w : g.neighbors(x)) mark[w] = 0;
    };
    auto non_neighbour_in = [&](int c) -> Vertex {
      for (Vertex y : members(c))
        if (!mark[y]) return y;
      return -1;
    };
    auto neighbour_in = [&](int c) -> Vertex {
      for (Vertex y : members(c))
        if (mark[y]) return y;
      return -1;
    };
    auto done = [&](ForbiddenWitness w) -> RecognitionOutcome {
      clear();
      return w;
    };

    if (on_count == 0) {
      clear();
      VertexSet hole(w5.begin(), w5.begin() + 5);
      return claw_or_net_from_path(g, hole, x);  // x takes the isolated role
    }
    if (on_count == 1) {
      int i = static_cast<int>(std::find(on.begin(), on.end(), true) - on.begin());
      return done({WitnessKind::Claw, {h(i), x, h(i - 1), h(i + 1)}});
    }
    if (on_count == 2) {
      for (int i = 0; i < 5; ++i) {
        if (on[i] && on[(i + 1) % 5]) {
          if (mark[hub]) return done({WitnessKind::Claw, {hub, h(i - 1), h(i + 2), x}});
          return done({WitnessKind::S3, {h(i), h(i + 1), hub, h(i + 2), h(i - 1), x}});
        }
      }
    }
    if (on_count < 5) {
      for (int i = 0; i < 5; ++i) {
        if (on[(i + 4) % 5] && on[(i + 1) % 5] && !on[i]) {
          return done({WitnessKind::C4, {x, h(i - 1), h(i), h(i + 1)}});
        }
      }
    }
    if (on_count == 5) {
      for (int c = 0; c < 6; ++c) {
        if (Vertex y = non_neighbour_in(c); y >= 0) {
          const int i = c == 5 ? 0 : c;
          return done({WitnessKind::C4, {x, h(i - 1), y, h(i + 1)}});
        }
      }
      clear();
      f.hub.push_back(x);
      cls[x] = 5;
      continue;
    }
    // exactly h_{i-1}, h_i, h_{i+1}
    int i = 0;
    while (!(on[(i + 4) % 5] && on[i] && on[(i + 1) % 5])) ++i;
    for (int c : {i, 5}) {
      if (Vertex y = non_neighbour_in(c); y >= 0) return done({WitnessKind::C4, {x, h(i - 1), y, h(i + 1)}});
    }
    if (Vertex y = non_neighbour_in((i + 4) % 5); y >= 0) return done({WitnessKind::Claw, {hub, y, h(i + 2), x}});
    if (Vertex y = non_neighbour_in((i + 1) % 5); y >= 0) return done({WitnessKind::Claw, {hub, h(i - 2), y, x}});
    if (Vertex y = neighbour_in((i + 3) % 5); y >= 0) return done({WitnessKind::C4, {x, h(i + 1), h(i + 2), y}});
    if (Vertex y = neighbour_in((i + 2) % 5); y >= 0) return done({WitnessKind::C4, {x, h(i - 1), h(i - 2), y}});
    clear();
    f.hole[i].push_back(x);
    cls[x] = i;
  }
  for (auto& k : f.hole) std::sort(k.begin(), k.end());
  std::sort(f.hub.begin(), f.hub.end());
  return f;
}

}  // namespace detail

/// Trichotomy on connected graphs: a proper Helly model, a claw / S3 / S3Bar
/// / C4 witness, or a fat W5 partition.
inline RecognitionOutcome recognize_f_free(const Graph& g) {
  PhcagOutcome r = recognize_phcag(g);
  if (auto* m = std::get_if<ArcModel>(&r)) return *m;
  const ForbiddenWitness& w = std::get<ForbiddenWitness>(r);
  const VertexSet& vs = w.vertices;
  switch (w.kind) {
    case WitnessKind::Claw:
    case WitnessKind::S3:
    case WitnessKind::S3Bar: return w;
    case WitnessKind::W4: return ForbiddenWitness{WitnessKind::C4, {vs[0], vs[1], vs[2], vs[3]}};
    case WitnessKind::C6Bar: return ForbiddenWitness{WitnessKind::C4, {vs[0], vs[1], vs[4], vs[3]}};
    case WitnessKind::CStar: {
      std::span<const Vertex> hole(vs.data(), vs.size() - 1);
      if (hole.size() == 4) return ForbiddenWitness{WitnessKind::C4, {vs[0], vs[1], vs[2], vs[3]}};
      return detail::claw_or_net_from_path(g, hole, vs.back());
    }
    case WitnessKind::W5: return detail::grow_fat_w5(g, vs);
    default: throw std::logic_error("recognize_f_free: unexpected obstruction");
  }
}

/// Either a proper interval model of g or a claw / S3 / S3Bar / hole.
struct UnitIntervalCertificate {
  std::optional<IntervalModel> model;
  std::optional<ForbiddenWitness> witness;
  bool yes() const { return model.has_value(); }
};

inline UnitIntervalCertificate is_unit_interval_certified(const Graph& g) {
  UnitIntervalCertificate out;
  auto chordal = is_chordal(g);
  if (!chordal.chordal) {
    out.witness = ForbiddenWitness{WitnessKind::Hole, std::move(chordal.hole)};
    return out;
  }
  auto pi = recognize_proper_interval(g);
  if (pi.model) {
    out.model = std::move(pi.model);
    return out;
  }
  if (auto w = find_claw(g)) {
    out.witness = std::move(w);
  } else if (auto w2 = find_net(g)) {
    out.witness = std::move(w2);
  } else if (auto w3 = find_tent(g)) {
    out.witness = std::move(w3);
  } else {
    throw std::logic_error("is_unit_interval_certified: no model and no obstruction");
  }
  return out;
}

inline bool is_unit_interval(const Graph& g) { return is_unit_interval_certified(g).yes(); }

}  // namespace uig

#endif  // UIG_RECOGNITION_HPP
