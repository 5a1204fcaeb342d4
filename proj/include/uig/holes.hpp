#ifndef UIG_HOLES_HPP
#define UIG_HOLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uig/arc_model.hpp"
#include "uig/chordal.hpp"
#include "uig/graph.hpp"

namespace uig {

/// Arrays of the greedy sweep, circularly linked in creation order.
struct HoleSearchState {
  std::vector<VertexSet> arrays;
  std::vector<Vertex> next, prev;
  std::vector<char> alive;
  Vertex current = -1;  // the array U
  Vertex head = -1;     // the first live array
  Vertex pending = -1;  // w, or -1 for none
  Vertex live = 0;
};

struct HoleSearchOptions {
  bool check_invariants = false;
  // called after every sweep step when set; position is the scanned endpoint
  std::function<void(const HoleSearchState&, std::int64_t position)> observer;
};

class HoleInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

/// Endpoint table of a canonical model: who owns point i, and which end.
struct EndpointTable {
  std::vector<Vertex> owner;
  std::vector<char> is_ccp;
};

inline EndpointTable endpoint_table(const ArcModel& m) {
  EndpointTable t;
  t.owner.assign(static_cast<std::size_t>(m.perimeter), -1);
  t.is_ccp.assign(static_cast<std::size_t>(m.perimeter), 0);
  for (Vertex x = 0; x < m.size(); ++x) {
    t.owner[m.arcs[x].ccp] = x;
    t.is_ccp[m.arcs[x].ccp] = 1;
    t.owner[m.arcs[x].cp] = x;
  }
  return t;
}

inline bool arcs_cover_circle(const ArcModel& m, const EndpointTable& t) {
  Vertex active = 0;
  for (const Arc& a : m.arcs) active += contains_probe(a, CutPoint{0});
  if (active == 0) return false;
  for (std::int64_t i = 1; i < m.perimeter; ++i) {
    active += t.is_ccp[i] ? 1 : -1;
    if (active == 0) return false;
  }
  return true;
}

/// The arc containing point x whose cp is furthest clockwise from x.
inline Vertex rightmost_containing(const ArcModel& m, std::int64_t x) {
  Vertex best = -1;
  std::int64_t reach = -1;
  for (Vertex y = 0; y < m.size(); ++y) {
    if (!contains_point(m.arcs[y], x)) continue;
    std::int64_t r = clockwise(x, m.arcs[y].cp, m.perimeter);
    if (r > reach) {
      reach = r;
      best = y;
    }
  }
  return best;
}

inline void check_hole_state(const HoleSearchState& s) {
  std::size_t lo = SIZE_MAX, hi = 0;
  for (std::size_t a = 0; a < s.arrays.size(); ++a) {
    if (!s.alive[a]) continue;
    lo = std::min(lo, s.arrays[a].size());
    hi = std::max(hi, s.arrays[a].size());
  }
  if (hi > lo + 1) throw HoleInvariantError("live arrays differ in size by more than one");
}

}  // namespace detail

/// Shortest hole of a non-chordal graph from a canonical proper Helly model
/// by the greedy array sweep. The model is rotated so that some arc starts
/// at 0 (that arc plays the role of v).
inline VertexSet shortest_hole(const Graph& g, const ArcModel& input, const HoleSearchOptions& opt = {}) {
  require_canonical(input, "shortest_hole");
  if (input.size() != g.order()) throw ModelError("shortest_hole: model and graph differ in order");
  const Vertex n = input.size();
  Vertex v = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (input.arcs[x].ccp < input.arcs[v].ccp) v = x;
  }
  const ArcModel m = input.arcs[v].ccp == 0 ? input : rotated(input, input.arcs[v].ccp);
  const auto t = detail::endpoint_table(m);
  if (!detail::arcs_cover_circle(m, t)) throw std::invalid_argument("shortest_hole: graph is chordal");

  HoleSearchState s;
  const std::int64_t cpv = m.arcs[v].cp;
  for (std::int64_t i = 1; i < cpv; ++i) {
    if (t.is_ccp[i]) s.arrays.push_back({t.owner[i]});
  }
  const auto k = static_cast<Vertex>(s.arrays.size());
  if (k == 0) throw std::invalid_argument("shortest_hole: graph is chordal");
  s.next.resize(static_cast<std::size_t>(k));
  s.prev.resize(static_cast<std::size_t>(k));
  for (Vertex a = 0; a < k; ++a) {
    s.next[a] = (a + 1) % k;
    s.prev[a] = (a + k - 1) % k;
  }
  s.alive.assign(static_cast<std::size_t>(k), 1);
  s.live = k;
  s.head = s.current = 0;

  auto drop = [&](Vertex a) {
    s.alive[a] = 0;
    --s.live;
    s.next[s.prev[a]] = s.next[a];
    s.prev[s.next[a]] = s.prev[a];
    if (s.head == a) s.head = s.live > 0 ? s.next[a] : -1;
  };

  for (std::int64_t i = cpv + 1; i < m.perimeter; ++i) {
    if (s.live == 0) throw std::logic_error("shortest_hole: every array was dropped");
    const Vertex z = s.arrays[s.current].back();
    if (t.is_ccp[i]) {
      s.pending = t.owner[i];
    } else if (i == m.arcs[z].cp) {
      if (s.pending < 0) {
        Vertex dropped = s.current;
        s.current = s.next[dropped];
        drop(dropped);
      } else {
        if (opt.check_invariants && detail::rightmost_containing(m, m.arcs[z].cp) != s.pending) {
          throw HoleInvariantError("appended vertex is not the rightmost arc containing cp(z)");
        }
        s.arrays[s.current].push_back(s.pending);
        s.pending = -1;
        s.current = s.next[s.current];
      }
    }
    if (opt.check_invariants) detail::check_hole_state(s);
    if (opt.observer) opt.observer(s, i);
  }
  if (s.live == 0) throw std::logic_error("shortest_hole: every array was dropped");

  if (opt.check_invariants) {
    for (Vertex a = 0; a < k; ++a) {
      if (!s.alive[a]) continue;
      std::int64_t c = m.arcs[s.arrays[a].back()].cp;
      if (!(0 < c && c < cpv)) throw HoleInvariantError("surviving array ends outside (0, cp(v))");
    }
  }

  // step 4: arrays in order from the first to the last; step 5 uses the last
  Vertex last = s.prev[s.head];
  for (Vertex a = s.head;; a = s.next[a]) {
    const VertexSet& u = s.arrays[a];
    if (u.size() >= 3 && arcs_intersect(m.arcs[u.front()], m.arcs[u.back()])) return u;
    if (a == last) break;
  }
  VertexSet hole = s.arrays[last];
  hole.push_back(v);
  return hole;
}

/// Shrinks a circle-covering set of arcs to an inclusion-minimal cover and
/// returns it in clockwise order; in a proper Helly model of a non-chordal
/// graph this is a hole.
inline VertexSet minimal_cover_to_hole(const ArcModel& model, std::span<const Vertex> arcs) {
  VertexSet cover(arcs.begin(), arcs.end());
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  for (Vertex x : cover) {
    if (x < 0 || x >= model.size()) throw std::out_of_range("minimal_cover_to_hole: vertex out of range");
  }
  if (!covers_circle(model, cover)) throw std::invalid_argument("minimal_cover_to_hole: arcs do not cover the circle");
  for (std::size_t i = cover.size(); i-- > 0;) {
    VertexSet rest = cover;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (covers_circle(model, rest)) cover = std::move(rest);
  }
  std::sort(cover.begin(), cover.end(),
            [&](Vertex a, Vertex b) { return model.arcs[a].ccp < model.arcs[b].ccp; });
  return cover;
}

}  // namespace uig

#endif  // UIG_HOLES_HPP
