#ifndef UIG_ARC_MODEL_HPP
#define UIG_ARC_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "uig/graph.hpp"

namespace uig {

/// Closed arc from `ccp` clockwise to `cp`. When ccp > cp the arc passes
/// through point 0.
template <typename Coord>
struct BasicArc {
  Coord ccp{};
  Coord cp{};
  bool operator==(const BasicArc&) const = default;
};

template <typename Coord>
struct BasicArcModel {
  Coord perimeter{};
  std::vector<BasicArc<Coord>> arcs;

  Vertex size() const { return static_cast<Vertex>(arcs.size()); }
  bool operator==(const BasicArcModel&) const = default;
};

using Arc = BasicArc<std::int64_t>;
/// Integer arc model. Canonical when the perimeter is 2n and the endpoints
/// are exactly 0..2n-1.
using ArcModel = BasicArcModel<std::int64_t>;

/// Probe point index + 0.5 of a canonical model. Probes never hit an endpoint.
struct CutPoint {
  std::int64_t index = 0;
  auto operator<=>(const CutPoint&) const = default;
};

struct Interval {
  std::int64_t lp = 0;
  std::int64_t rp = 0;
  bool operator==(const Interval&) const = default;
};

struct IntervalModel {
  std::vector<Interval> intervals;
  Vertex size() const { return static_cast<Vertex>(intervals.size()); }
};

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Point geometry

inline bool contains_point(const Arc& a, std::int64_t x) {
  return a.ccp <= a.cp ? (a.ccp <= x && x <= a.cp) : (x >= a.ccp || x <= a.cp);
}

inline bool contains_probe(const Arc& a, CutPoint p) {
  const std::int64_t i = p.index;
  return a.ccp <= a.cp ? (a.ccp <= i && i < a.cp) : (i >= a.ccp || i < a.cp);
}

inline bool arcs_intersect(const Arc& a, const Arc& b) {
  return contains_point(a, b.ccp) || contains_point(b, a.ccp);
}

/// Clockwise distance from x to y on a circle of perimeter `len`.
inline std::int64_t clockwise(std::int64_t x, std::int64_t y, std::int64_t len) {
  std::int64_t d = (y - x) % len;
  return d < 0 ? d + len : d;
}

/// True iff arc `inner` is a subset of arc `outer`.
inline bool arc_within(const Arc& inner, const Arc& outer, std::int64_t perimeter) {
  const std::int64_t span = clockwise(outer.ccp, outer.cp, perimeter);
  const std::int64_t s = clockwise(outer.ccp, inner.ccp, perimeter);
  const std::int64_t e = clockwise(outer.ccp, inner.cp, perimeter);
  return s <= span && e <= span && s <= e;
}

inline bool is_canonical(const ArcModel& model) {
  const auto n = static_cast<std::int64_t>(model.arcs.size());
  if (model.perimeter != 2 * n) return false;
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  for (const Arc& a : model.arcs) {
    for (std::int64_t x : {a.ccp, a.cp}) {
      if (x < 0 || x >= 2 * n || seen[x]) return false;
      seen[x] = 1;
    }
  }
  return true;
}

inline void require_canonical(const ArcModel& model, const char* who) {
  if (!is_canonical(model)) throw ModelError(std::string(who) + ": model is not canonical");
}

/// Replaces every endpoint by its rank among all 2n endpoints.
template <typename Coord>
ArcModel canonicalize(const BasicArcModel<Coord>& model) {
  const std::size_t n = model.arcs.size();
  struct End {
    Coord pos;
    std::size_t slot;  // 2 * vertex + (0 for ccp, 1 for cp)
  };
  std::vector<End> ends;
  ends.reserve(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    for (int side = 0; side < 2; ++side) {
      Coord x = side == 0 ? model.arcs[v].ccp : model.arcs[v].cp;
      if (x < Coord{} || !(x < model.perimeter)) {
        throw ModelError("endpoint outside [0, perimeter)");
      }
      ends.push_back({x, 2 * v + static_cast<std::size_t>(side)});
    }
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) { return a.pos < b.pos; });
  for (std::size_t i = 1; i < ends.size(); ++i) {
    if (!(ends[i - 1].pos < ends[i].pos)) throw ModelError("duplicate endpoints");
  }
  ArcModel out;
  out.perimeter = static_cast<std::int64_t>(2 * n);
  out.arcs.resize(n);
  for (std::size_t r = 0; r < ends.size(); ++r) {
    auto& a = out.arcs[ends[r].slot / 2];
    (ends[r].slot % 2 == 0 ? a.ccp : a.cp) = static_cast<std::int64_t>(r);
  }
  return out;
}

/// Shifts every endpoint counterclockwise by `shift` (so `shift` becomes 0).
inline ArcModel rotated(const ArcModel& model, std::int64_t shift) {
  ArcModel out = model;
  for (Arc& a : out.arcs) {
    a.ccp = clockwise(shift, a.ccp, model.perimeter);
    a.cp = clockwise(shift, a.cp, model.perimeter);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Represented graph

/// Intersection graph of closed arcs, by one sweep over the endpoints.
inline Graph represented_graph(const ArcModel& model) {
  const Vertex n = model.size();
  struct Event {
    std::int64_t pos;
    int kind;  // 0 = start, 1 = end; starts first at equal positions
    Vertex v;
  };
  std::vector<Event> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  VertexSet active;
  std::vector<std::int64_t> where(static_cast<std::size_t>(n), -1);
  auto activate = [&](Vertex v) {
    where[v] = static_cast<std::int64_t>(active.size());
    active.push_back(v);
  };
  auto deactivate = [&](Vertex v) {
    if (where[v] < 0) return;
    Vertex last = active.back();
    active[where[v]] = last;
    where[last] = where[v];
    active.pop_back();
    where[v] = -1;
  };
  for (Vertex v = 0; v < n; ++v) {
    const Arc& a = model.arcs[v];
    events.push_back({a.ccp, 0, v});
    events.push_back({a.cp, 1, v});
    if (a.ccp > a.cp) activate(v);
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.kind < b.kind;
  });
  EdgeSet edges;
  for (const Event& e : events) {
    if (e.kind == 0) {
      for (Vertex w : active) {
        if (w != e.v) edges.emplace_back(e.v, w);
      }
      if (where[e.v] < 0) activate(e.v);
    } else {
      deactivate(e.v);
    }
  }
  return Graph::from_edges_dedup(n, std::move(edges));
}

inline Graph represented_graph(const IntervalModel& model) {
  const Vertex n = model.size();
  VertexSet order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return model.intervals[a].lp < model.intervals[b].lp;
  });
  EdgeSet edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Interval& a = model.intervals[order[i]];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (model.intervals[order[j]].lp > a.rp) break;
      edges.emplace_back(order[i], order[j]);
    }
  }
  return Graph::from_edges_dedup(n, std::move(edges));
}

inline bool is_proper(const IntervalModel& model) {
  const auto& iv = model.intervals;
  VertexSet order(iv.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return iv[a].lp != iv[b].lp ? iv[a].lp < iv[b].lp : iv[a].rp > iv[b].rp;
  });
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv[order[i]].lp >= iv[order[i]].rp) return false;
    if (i > 0 && iv[order[i]].rp <= iv[order[i - 1]].rp) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Point cliques and directed cuts

/// K(alpha): vertices whose arcs contain the probe point.
inline VertexSet point_clique(const ArcModel& model, CutPoint alpha) {
  VertexSet out;
  for (Vertex v = 0; v < model.size(); ++v) {
    if (contains_probe(model.arcs[v], alpha)) out.push_back(v);
  }
  return out;
}

/// True iff cp(v) lies in A(u), i.e. v meets u from the left.
inline bool intersects_from_left(const ArcModel& model, Vertex v, Vertex u) {
  const Arc& av = model.arcs.at(v);
  const Arc& au = model.arcs.at(u);
  if (u == v || !arcs_intersect(av, au)) {
    throw ModelError("intersects_from_left: arcs " + std::to_string(v) + " and " +
                     std::to_string(u) + " do not intersect");
  }
  return contains_point(au, av.cp);
}

/// Edges vu with v in K(alpha), u outside it, and v meeting u from the left.
/// `g` must be the represented graph of `model`.
inline EdgeSet directed_cut(const ArcModel& model, const Graph& g, CutPoint alpha) {
  std::vector<char> in(static_cast<std::size_t>(model.size()), 0);
  for (Vertex v = 0; v < model.size(); ++v) in[v] = contains_probe(model.arcs[v], alpha);
  EdgeSet out;
  for (Vertex v = 0; v < model.size(); ++v) {
    if (!in[v]) continue;
    for (Vertex u : g.neighbors(v)) {
      if (!in[u] && contains_point(model.arcs[u], model.arcs[v].cp)) out.emplace_back(v, u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline EdgeSet directed_cut(const ArcModel& model, CutPoint alpha) {
  return directed_cut(model, represented_graph(model), alpha);
}

/// Unrolls a canonical model at alpha into an interval model of
/// G - directed_cut(model, alpha). Coordinates live in (alpha, alpha + L);
/// arcs through alpha get their clockwise end pushed past alpha + L.
inline IntervalModel cut_to_interval_model(const ArcModel& model, CutPoint alpha) {
  require_canonical(model, "cut_to_interval_model");
  const std::int64_t len = model.perimeter;
  IntervalModel out;
  out.intervals.reserve(model.arcs.size());
  for (const Arc& a : model.arcs) {
    std::int64_t lp = a.ccp > alpha.index ? a.ccp : a.ccp + len;
    std::int64_t rp = a.cp > alpha.index ? a.cp : a.cp + len;
    if (rp < lp) rp += len;
    out.intervals.push_back({lp, rp});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coverage and verification

/// True iff the union of the selected arcs is the whole circle. Endpoints
/// must be integers; an uncovered region always contains some cp + 0.5.
inline bool covers_circle(const ArcModel& model, std::span<const Vertex> subset) {
  if (subset.empty()) return false;
  for (Vertex x : subset) {
    const CutPoint after{model.arcs[x].cp};
    if (std::none_of(subset.begin(), subset.end(),
                     [&](Vertex y) { return contains_probe(model.arcs[y], after); })) {
      return false;
    }
  }
  return true;
}

inline bool is_proper(const ArcModel& model, const Graph& rep) {
  for (const Edge& e : rep.edges()) {
    if (arc_within(model.arcs[e.u], model.arcs[e.v], model.perimeter) ||
        arc_within(model.arcs[e.v], model.arcs[e.u], model.perimeter)) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline bool have_common_point(const ArcModel& model, std::span<const Vertex> set) {
  if (set.empty()) return true;
  for (Vertex x : set) {
    bool ok = true;
    for (Vertex y : set) {
      if (!contains_point(model.arcs[y], model.arcs[x].ccp)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Bron-Kerbosch with pivoting; calls `visit` on every maximal clique until
// it returns false.
inline bool for_each_maximal_clique(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                                    const std::function<bool(const VertexSet&)>& visit) {
  if (p.empty() && x.empty()) return visit(r);
  Vertex pivot = p.empty() ? x.front() : p.front();
  VertexSet cand;
  for (Vertex v : p) {
    if (!g.adjacent(pivot, v)) cand.push_back(v);
  }
  for (Vertex v : cand) {
    VertexSet r2 = r, p2, x2;
    r2.push_back(v);
    for (Vertex w : p) {
      if (g.adjacent(v, w)) p2.push_back(w);
    }
    for (Vertex w : x) {
      if (g.adjacent(v, w)) x2.push_back(w);
    }
    if (!for_each_maximal_clique(g, std::move(r2), std::move(p2), std::move(x2), visit)) return false;
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
  return true;
}

}  // namespace detail

/// Helly test. Without two arcs covering the circle the model is Helly iff
/// no three pairwise-intersecting arcs cover it; otherwise every maximal
/// clique of the represented graph is checked for a common point.
inline bool is_helly(const ArcModel& model, const Graph& rep) {
  bool two_cover = false;
  for (const Edge& e : rep.edges()) {
    const Vertex pair[2] = {e.u, e.v};
    if (covers_circle(model, pair)) {
      two_cover = true;
      break;
    }
  }
  if (!two_cover) {
    for (Vertex a = 0; a < rep.order(); ++a) {
      auto nb = rep.neighbors(a);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] < a) continue;
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!rep.adjacent(nb[i], nb[j])) continue;
          const Vertex triple[3] = {a, nb[i], nb[j]};
          if (covers_circle(model, triple)) return false;
        }
      }
    }
    return true;
  }
  VertexSet all(static_cast<std::size_t>(rep.order()));
  std::iota(all.begin(), all.end(), 0);
  return detail::for_each_maximal_clique(rep, {}, all, {}, [&](const VertexSet& clique) {
    return detail::have_common_point(model, clique);
  });
}

struct ModelCheck {
  bool represents = false;
  bool proper = false;
  bool helly = false;
  bool ok() const { return represents && proper && helly; }
  bool operator==(const ModelCheck&) const = default;
};

inline ModelCheck verify_model(const Graph& g, const ArcModel& model) {
  ModelCheck c;
  Graph rep = represented_graph(model);
  c.represents = rep == g;
  c.proper = is_proper(model, rep);
  c.helly = is_helly(model, rep);
  return c;
}

/// Interval model seen as arcs on a circle of perimeter 2n (canonical).
inline ArcModel as_arc_model(const IntervalModel& im) {
  std::int64_t lo = 0, hi = 0;
  for (const Interval& i : im.intervals) {
    lo = std::min(lo, i.lp);
    hi = std::max(hi, i.rp);
  }
  BasicArcModel<std::int64_t> raw;
  raw.perimeter = hi - lo + 1;
  for (const Interval& i : im.intervals) raw.arcs.push_back({i.lp - lo, i.rp - lo});
  return canonicalize(raw);
}

}  // namespace uig

#endif  // UIG_ARC_MODEL_HPP
