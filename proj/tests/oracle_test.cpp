#include <gtest/gtest.h>

#include <random>

#include "support/graphs.hpp"
#include "uig/io.hpp"
#include "uig/oracle.hpp"
#include "uig/recognition.hpp"

using namespace uig;
namespace tg = testing_graphs;

TEST(OracleMembership, Examples) {
  EXPECT_TRUE(oracle::is_unit_interval_bruteforce(tg::path(7)));
  EXPECT_FALSE(oracle::is_unit_interval_bruteforce(tg::net()));
  EXPECT_FALSE(oracle::is_unit_interval_bruteforce(tg::cycle(4)));
  EXPECT_FALSE(oracle::is_unit_interval_bruteforce(tg::claw()));
  EXPECT_FALSE(oracle::is_unit_interval_bruteforce(tg::tent()));
  EXPECT_TRUE(oracle::is_unit_interval_bruteforce(tg::complete(5)));
}

TEST(OracleMembership, AgreesWithCertifiedRecognitionUpToSeven) {
  for (Vertex n = 1; n <= 7; ++n) {
    for (const Graph& g : tg::connected_nonisomorphic_graphs(n)) {
      ASSERT_EQ(oracle::is_unit_interval_bruteforce(g), is_unit_interval_certified(g).yes());
    }
  }
}

TEST(OracleMinimum, VertexAndEdgeDeletionExamples) {
  EXPECT_EQ(oracle::brute_min_uivd(tg::claw()).value, 1u);
  EXPECT_EQ(oracle::brute_min_uied(tg::claw()).value, 1u);
  EXPECT_EQ(oracle::brute_min_uivd(tg::tent()).value, 1u);
  EXPECT_EQ(oracle::brute_min_uied(tg::tent()).value, 2u);
  EXPECT_EQ(oracle::brute_min_uivd(tg::wheel(5)).value, 1u);
  EXPECT_EQ(oracle::brute_min_uied(tg::wheel(5)).value, 2u);
  EXPECT_EQ(oracle::brute_min_uivd(tg::path(5)).value, 0u);
}

TEST(OracleMinimum, RealizingSetsVerify) {
  for (const Graph& g : tg::connected_nonisomorphic_graphs(6)) {
    auto v = oracle::brute_min_uivd(g);
    ASSERT_EQ(v.set.size(), v.value);
    ASSERT_TRUE(oracle::is_unit_interval_bruteforce(without_vertices(g, v.set)));
    auto e = oracle::brute_min_uied(g);
    ASSERT_EQ(e.set.size(), e.value);
    ASSERT_TRUE(oracle::is_unit_interval_bruteforce(without_edges(g, e.set)));
  }
}

TEST(OracleMinimum, FirstHitIsCardinalityLexicographic) {
  // the claw centre is the only single vertex whose deletion helps
  auto r = oracle::brute_min_uivd(tg::claw());
  EXPECT_EQ(r.set, (VertexSet{0}));
}

TEST(OracleMinimum, Guards) {
  EXPECT_THROW(oracle::brute_min_uivd(tg::path(13)), GuardError);
  EXPECT_THROW(oracle::brute_min_uied(tg::complete(8)), GuardError);
  EXPECT_THROW(oracle::brute_min_editing(tg::path(9), {}), GuardError);
}

TEST(OracleEditing, Examples) {
  EXPECT_TRUE(oracle::brute_min_editing(tg::cycle(4), {0, 0, 1}));
  EXPECT_FALSE(oracle::brute_min_editing(tg::cycle(6), {0, 0, 2}));
  EXPECT_TRUE(oracle::brute_min_editing(tg::cycle(6), {0, 0, 3}));
  auto k1 = oracle::brute_min_editing(Graph(1), {2, 2, 2});
  ASSERT_TRUE(k1);
  EXPECT_TRUE(k1->deleted_vertices.empty());
  EXPECT_TRUE(k1->deleted_edges.empty());
  EXPECT_TRUE(k1->added_edges.empty());
}

TEST(OracleEditing, ReturnedEditsVerify) {
  for (const Graph& g : tg::connected_nonisomorphic_graphs(5)) {
    auto r = oracle::brute_min_editing(g, {1, 1, 1});
    if (!r) continue;
    ASSERT_LE(r->deleted_vertices.size(), 1u);
    ASSERT_LE(r->deleted_edges.size(), 1u);
    ASSERT_LE(r->added_edges.size(), 1u);
    Graph h = without_vertices(edited(g, r->deleted_edges, r->added_edges), r->deleted_vertices);
    ASSERT_TRUE(oracle::is_unit_interval_bruteforce(h));
  }
}

TEST(OracleGenerator, PinnedSixVertexModel) {
  auto gen = oracle::random_phcag(6, 2024);
  ArcModel expected = parse_arc_model("6 12\n11 2\n5 8\n7 10\n0 4\n9 1\n3 6\n");
  EXPECT_EQ(gen.model, expected);
  EXPECT_EQ(gen.graph, parse_graph("6 7\n0 3\n0 4\n1 2\n1 5\n2 4\n3 4\n3 5\n"));
  EXPECT_TRUE(verify_model(gen.graph, gen.model).ok());
}

TEST(OracleGenerator, DrawsAreVerifiedConnectedAndNonChordal) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto gen = oracle::random_phcag(4 + static_cast<Vertex>(seed % 20), seed);
    ASSERT_TRUE(is_canonical(gen.model));
    ASSERT_EQ(represented_graph(gen.model), gen.graph);
    ASSERT_TRUE(verify_model(gen.graph, gen.model).ok());
    ASSERT_TRUE(is_connected(gen.graph));
    ASSERT_TRUE(oracle::shortest_hole_bruteforce(gen.graph).has_value());
  }
  EXPECT_THROW(oracle::random_phcag(3, 0), std::invalid_argument);
}

TEST(OracleGenerator, EqualShortArcsAreProper) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    BasicArcModel<std::int64_t> raw;
    raw.perimeter = 1 << 20;
    const std::int64_t len = raw.perimeter / 4;
    std::uniform_int_distribution<std::int64_t> point(0, raw.perimeter - 1);
    for (int i = 0; i < 12; ++i) {
      std::int64_t s = point(rng);
      raw.arcs.push_back({s, (s + len) % raw.perimeter});
    }
    ArcModel m = canonicalize(raw);
    Graph g = represented_graph(m);
    auto check = verify_model(g, m);
    EXPECT_TRUE(check.proper);
    EXPECT_TRUE(check.helly);
  }
}

TEST(OracleGenerator, CycleModelVerifies) {
  for (Vertex n = 4; n <= 30; ++n) {
    ArcModel m = oracle::cycle_model(n);
    ASSERT_TRUE(is_canonical(m));
    ASSERT_EQ(represented_graph(m), tg::cycle(n));
    ASSERT_TRUE(verify_model(tg::cycle(n), m).ok());
  }
}

TEST(OracleGenerator, PerturbedPlantsAnUpperBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto p = oracle::perturbed(9, seed, 2);
    ASSERT_TRUE(oracle::is_unit_interval_bruteforce(p.planted));
    ASSERT_LE(oracle::brute_min_uivd(p.graph).value, p.flipped.size());
  }
}
