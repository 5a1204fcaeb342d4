#include <gtest/gtest.h>

#include <cmath>

#include "support/graphs.hpp"
#include "uig/io.hpp"
#include "uig/oracle.hpp"
#include "uig/phcag_solvers.hpp"

using namespace uig;
namespace tg = testing_graphs;

namespace {

ArcModel c4_model() { return ArcModel{8, {{7, 2}, {1, 4}, {3, 6}, {5, 0}}}; }

ArcModel scaled(const ArcModel& m, std::int64_t factor) {
  ArcModel out = m;
  out.perimeter *= factor;
  for (Arc& a : out.arcs) {
    a.ccp *= factor;
    a.cp *= factor;
  }
  return out;
}

// C6 arcs scaled by 4 plus an ear meeting only arcs 0 and 1
ArcModel c6_with_ear() {
  BasicArcModel<std::int64_t> raw = scaled(oracle::cycle_model(6), 4);
  raw.arcs.push_back({2, 10});
  return canonicalize(raw);
}

// ten arcs of length 3.25 starting at 0..9 on a circle of length 10, one
// stretched so that a single probe is covered twice and every other probe
// three times
ArcModel single_thin_probe() {
  BasicArcModel<double> raw;
  raw.perimeter = 10.0;
  for (int i = 0; i < 10; ++i) raw.arcs.push_back({double(i), std::fmod(i + 3.25, 10.0)});
  raw.arcs[5].cp = 7.3;
  raw.arcs[4].cp = 7.2;
  return canonicalize(raw);
}

bool unit_interval_after(const Graph& g, const VertexSet& vs, const EdgeSet& es) {
  return oracle::is_unit_interval_bruteforce(without_vertices(without_edges(g, es), vs));
}

}  // namespace

TEST(MinVertexCut, C4) {
  ScanResult r = min_vertex_cut(c4_model());
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.alpha.index, 0);
  EXPECT_EQ(r.vertices, (VertexSet{0}));
}

TEST(MinVertexCut, PlainC6) { EXPECT_EQ(min_vertex_cut(oracle::cycle_model(6)).value, 1u); }

TEST(MinVertexCut, SingleThinProbe) {
  ArcModel m = single_thin_probe();
  Graph g = represented_graph(m);
  ASSERT_TRUE(verify_model(g, m).ok());
  std::size_t thin = 0;
  for (std::int64_t i = 0; i < m.perimeter; ++i) {
    std::size_t k = point_clique(m, CutPoint{i}).size();
    EXPECT_GE(k, 2u);
    thin += k == 2;
  }
  ASSERT_EQ(thin, 1u);
  ScanResult r = min_vertex_cut(m);
  EXPECT_EQ(r.value, 2u);
  EXPECT_EQ(point_clique(m, r.alpha).size(), 2u);
  EXPECT_TRUE(unit_interval_after(g, r.vertices, {}));
}

TEST(MinEdgeCut, C4) {
  ScanResult r = min_edge_cut(c4_model());
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.edges.size(), 1u);
}

TEST(MinEdgeCut, EarRaisesTheCutUnderIt) {
  ArcModel m = c6_with_ear();
  Graph g = represented_graph(m);
  ASSERT_TRUE(verify_model(g, m).ok());
  const Vertex ear = 6;
  EXPECT_EQ(min_edge_cut(m).value, 1u);
  bool thin_outside = false, thick_under = false;
  for (std::int64_t i = 0; i < m.perimeter; ++i) {
    const std::size_t c = directed_cut(m, g, CutPoint{i}).size();
    if (contains_probe(m.arcs[ear], CutPoint{i})) {
      thick_under |= c == 2;
    } else {
      thin_outside |= c == 1;
    }
  }
  EXPECT_TRUE(thin_outside);
  EXPECT_TRUE(thick_under);
}

TEST(MinEdgeCut, ProfileMatchesDirectEvaluation) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto gen = oracle::random_phcag(4 + static_cast<Vertex>(seed % 30), seed);
    auto profile = edge_cut_profile(gen.model);
    for (std::int64_t i = 0; i < gen.model.perimeter; ++i) {
      ASSERT_EQ(profile[i], directed_cut(gen.model, gen.graph, CutPoint{i}).size()) << "seed " << seed;
    }
  }
}

TEST(Scans, AgreeWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto gen = oracle::random_phcag(4 + static_cast<Vertex>(seed % 9), seed);
    const Graph& g = gen.graph;
    ScanResult v = min_vertex_cut(gen.model);
    EXPECT_EQ(v.value, oracle::brute_min_uivd(g).value) << "seed " << seed;
    EXPECT_TRUE(unit_interval_after(g, v.vertices, {}));
    ScanResult e = min_edge_cut(gen.model);
    EXPECT_TRUE(unit_interval_after(g, {}, e.edges));
    if (g.size() <= 24) {
      EXPECT_EQ(e.value, oracle::brute_min_uied(g).value) << "seed " << seed;
    }
  }
}

TEST(Scans, ChordalModelNeedsNothing) {
  ArcModel m = as_arc_model(*recognize_proper_interval(tg::path(5)).model);
  EXPECT_EQ(min_vertex_cut(m), ScanResult{});
  EXPECT_EQ(min_edge_cut(m), ScanResult{});
  EXPECT_EQ(mixed_min_edges(m, 2), ScanResult{});
}

TEST(MixedMinEdges, C6) {
  ArcModel m = oracle::cycle_model(6);
  ScanResult one = mixed_min_edges(m, 1);
  EXPECT_EQ(one.value, 0u);
  EXPECT_EQ(one.vertices.size(), 1u);
  ScanResult zero = mixed_min_edges(m, 0);
  EXPECT_EQ(zero.value, 1u);
  EXPECT_TRUE(zero.vertices.empty());
}

TEST(MixedMinEdges, AgreesWithBruteForceAndIsMonotone) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto gen = oracle::random_phcag(4 + static_cast<Vertex>(seed % 7), seed);
    const Graph& g = gen.graph;
    std::size_t previous = SIZE_MAX;
    for (std::size_t p = 0; p <= 2; ++p) {
      ScanResult r = mixed_min_edges(gen.model, p);
      EXPECT_LE(r.vertices.size(), p);
      EXPECT_EQ(r.value, r.edges.size());
      EXPECT_TRUE(unit_interval_after(g, r.vertices, r.edges)) << "seed " << seed << " p " << p;
      std::size_t q = 0;
      while (!oracle::brute_min_editing(g, {p, q, 0}, 10)) ++q;
      EXPECT_EQ(r.value, q) << "seed " << seed << " p " << p;
      EXPECT_LE(r.value, previous);
      previous = r.value;
    }
  }
}

TEST(FatW5Solvers, VertexDeletion) {
  FatW5 f;
  Graph g = tg::fat_w5({2, 3, 1, 4, 2}, 5, &f);
  VertexSet d = fat_w5_vertex_deletion(f);
  EXPECT_EQ(d, f.hole[2]);
  EXPECT_TRUE(oracle::is_unit_interval_bruteforce(without_vertices(g, d)));
  EXPECT_FALSE(oracle::is_unit_interval_bruteforce(g));

  Graph w5 = tg::fat_w5({1, 1, 1, 1, 1}, 1, &f);
  EXPECT_EQ(fat_w5_vertex_deletion(f).size(), 1u);
  EXPECT_EQ(oracle::brute_min_uivd(w5).value, 1u);

  Graph even = tg::fat_w5({3, 3, 3, 3, 3}, 1, &f);
  d = fat_w5_vertex_deletion(f);
  EXPECT_EQ(d.size(), 3u);
  EXPECT_TRUE(oracle::is_unit_interval_bruteforce(without_vertices(even, d)));
}

TEST(FatW5Solvers, EdgeDeletion) {
  FatW5 f;
  Graph w5 = tg::fat_w5({1, 1, 1, 1, 1}, 1, &f);
  EdgeSet d = fat_w5_edge_deletion(f);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(oracle::brute_min_uied(w5).value, 2u);
  EXPECT_TRUE(oracle::is_unit_interval_bruteforce(without_edges(w5, d)));

  Graph g = tg::fat_w5({1, 2, 3, 2, 1}, 2, &f);
  std::array<std::size_t, 5> costs{};
  for (std::size_t i = 0; i < 5; ++i) costs[i] = fat_w5_edge_cost(f, i);
  EXPECT_EQ(costs, (std::array<std::size_t, 5>{4, 10, 10, 4, 3}));
  d = fat_w5_edge_deletion(f);
  EXPECT_EQ(d.size(), 3u);
  EXPECT_TRUE(oracle::is_unit_interval_bruteforce(without_edges(g, d)));

  tg::fat_w5({2, 2, 2, 2, 2}, 3, &f);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(fat_w5_edge_cost(f, i), 4u + 2u * 3u);
}

TEST(Fixtures, ThinnestProbesForVerticesAndEdgesDiffer) {
  ArcModel m = parse_arc_model("8 16\n15 3\n0 5\n8 13\n7 11\n12 2\n9 14\n4 10\n1 6\n");
  ASSERT_TRUE(verify_model(represented_graph(m), m).ok());
  auto k = detail::clique_profile(m, detail::endpoint_table(m));
  auto c = edge_cut_profile(m);
  const auto mk = *std::min_element(k.begin(), k.end());
  const auto mc = *std::min_element(c.begin(), c.end());
  EXPECT_EQ(mk, 1u);
  EXPECT_EQ(mc, 2u);
  for (std::size_t i = 0; i < k.size(); ++i) EXPECT_FALSE(k[i] == mk && c[i] == mc) << "probe " << i;
}

TEST(Fixtures, InclusionMinimalDirectedCutAboveMinimum) {
  ArcModel m = parse_arc_model("6 12\n9 1\n3 7\n5 8\n10 2\n0 4\n6 11\n");
  Graph g = represented_graph(m);
  EdgeSet cut = directed_cut(m, g, CutPoint{3});
  ASSERT_EQ(cut, (EdgeSet{{1, 2}, {1, 5}}));
  EXPECT_TRUE(oracle::is_unit_interval_bruteforce(without_edges(g, cut)));
  for (const Edge& e : cut) {
    EXPECT_FALSE(oracle::is_unit_interval_bruteforce(without_edges(g, std::span<const Edge>(&e, 1))));
  }
  EXPECT_EQ(oracle::brute_min_uied(g).value, 1u);
  EXPECT_EQ(min_edge_cut(m).value, 1u);
}
