#include <gtest/gtest.h>

#include "support/graphs.hpp"
#include "uig/fpt.hpp"
#include "uig/oracle.hpp"

using namespace uig;
namespace tg = testing_graphs;

namespace {

std::size_t power_of_four(std::size_t k) {
  std::size_t p = 1;
  while (k-- > 0) p *= 4;
  return p;
}

bool certified(const Graph& g) { return is_unit_interval_certified(g).yes(); }

}  // namespace

TEST(SolveUivd, Examples) {
  auto claw = solve_uivd(tg::claw(), 1);
  ASSERT_TRUE(claw);
  EXPECT_EQ(claw->size(), 1u);
  auto tent = solve_uivd(tg::tent(), 1);
  ASSERT_TRUE(tent);
  EXPECT_TRUE(certified(without_vertices(tg::tent(), *tent)));
  EXPECT_FALSE(solve_uivd(tg::cycle(4), 0));
  EXPECT_FALSE(solve_uivd(tg::wheel(5), 0));
  EXPECT_TRUE(solve_uivd(tg::wheel(5), 1));
}

TEST(SolveUied, Examples) {
  EXPECT_TRUE(solve_uied(tg::claw(), 1));
  EXPECT_FALSE(solve_uied(tg::tent(), 1));
  auto tent = solve_uied(tg::tent(), 2);
  ASSERT_TRUE(tent);
  EXPECT_TRUE(certified(without_edges(tg::tent(), *tent)));
  EXPECT_TRUE(solve_uied(tg::cycle(6), 1));
  EXPECT_FALSE(solve_uied(tg::wheel(5), 1));
  auto w5 = solve_uied(tg::wheel(5), 2);
  ASSERT_TRUE(w5);
  EXPECT_EQ(w5->size(), 2u);
}

TEST(SolveUie, Examples) {
  auto c6 = solve_uie(tg::cycle(6), {0, 1, 0});
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->deleted_edges.size(), 1u);
  EXPECT_FALSE(solve_uie(tg::cycle(6), {0, 0, 2}));
  auto c4 = solve_uie(tg::cycle(4), {0, 0, 1});
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->added_edges.size(), 1u);
  EXPECT_TRUE(certified(apply_editing(tg::cycle(4), *c4)));
  EXPECT_TRUE(solve_uie(tg::wheel(5), {1, 0, 0}));
  EXPECT_FALSE(solve_uie(tg::wheel(5), {0, 1, 0}));
}

TEST(ApproxUivd, Examples) {
  EXPECT_TRUE(approx_uivd(tg::path(6)).empty());
  EXPECT_EQ(approx_uivd(tg::claw()), (VertexSet{0, 1, 2, 3}));
}

TEST(SolveUivd, AgreesWithBruteForceOnAllConnectedGraphsUpToSeven) {
  for (Vertex n = 1; n <= 7; ++n) {
    for (const Graph& g : tg::connected_nonisomorphic_graphs(n)) {
      const std::size_t opt = oracle::brute_min_uivd(g).value;
      for (std::size_t k = 0; k <= opt; ++k) {
        auto r = solve_uivd(g, k);
        ASSERT_EQ(r.has_value(), k == opt);
        if (r) {
          EXPECT_LE(r->size(), k);
          EXPECT_TRUE(certified(without_vertices(g, *r)));
        }
      }
    }
  }
}

TEST(SolveUied, AgreesWithBruteForceAndStaysWithinFourToTheK) {
  for (Vertex n = 1; n <= 7; ++n) {
    for (const Graph& g : tg::connected_nonisomorphic_graphs(n)) {
      const std::size_t opt = oracle::brute_min_uied(g, 30).value;
      for (std::size_t k = 0; k <= opt; ++k) {
        SearchStats stats;
        auto r = solve_uied(g, k, &stats);
        ASSERT_EQ(r.has_value(), k == opt);
        EXPECT_LE(stats.leaves, power_of_four(k));
        if (r) {
          EXPECT_LE(r->size(), k);
          EXPECT_TRUE(certified(without_edges(g, *r)));
        }
      }
    }
  }
}

TEST(SolveUie, AgreesWithBruteForceOnAllConnectedGraphsUpToSix) {
  for (Vertex n = 1; n <= 6; ++n) {
    for (const Graph& g : tg::connected_nonisomorphic_graphs(n)) {
      for (std::size_t k1 = 0; k1 <= 2; ++k1) {
        for (std::size_t k2 = 0; k2 <= 2; ++k2) {
          for (std::size_t k3 = 0; k3 <= 2; ++k3) {
            auto r = solve_uie(g, {k1, k2, k3});
            auto o = oracle::brute_min_editing(g, {k1, k2, k3});
            ASSERT_EQ(r.has_value(), o.has_value());
            if (!r) continue;
            EXPECT_LE(r->deleted_vertices.size(), k1);
            EXPECT_LE(r->deleted_edges.size(), k2);
            EXPECT_LE(r->added_edges.size(), k3);
            EXPECT_TRUE(certified(apply_editing(g, *r)));
          }
        }
      }
    }
  }
}

TEST(SolveUie, ReducedInstancesAddNoEdges) {
  // long holes with triangle ears are reduced for small k3
  for (Vertex k = 8; k <= 11; ++k) {
    EdgeSet es;
    for (Vertex i = 0; i < k; ++i) {
      es.emplace_back(i, (i + 1) % k);
      es.emplace_back(i, k + i);
      es.emplace_back((i + 1) % k, k + i);
    }
    Graph g = Graph::from_edges_dedup(2 * k, es);
    // a hole edge alone leaves a longer hole through its ear
    EXPECT_FALSE(solve_uie(g, {0, 1, 2}));
    auto r = solve_uie(g, {0, 2, 2});
    ASSERT_TRUE(r);
    EXPECT_TRUE(r->added_edges.empty());
    EXPECT_EQ(r->deleted_edges.size(), 2u);
    EXPECT_TRUE(certified(apply_editing(g, *r)));
  }
}

TEST(SolveUie, DisconnectedBudgetsAreShared) {
  Graph g = tg::disjoint_union(tg::cycle(6), tg::cycle(7));
  EXPECT_FALSE(solve_uie(g, {1, 0, 0}));
  auto both = solve_uie(g, {1, 1, 0});
  ASSERT_TRUE(both);
  EXPECT_TRUE(certified(apply_editing(g, *both)));
  EXPECT_FALSE(solve_uivd(g, 1));
  EXPECT_TRUE(solve_uivd(g, 2));
  EXPECT_FALSE(solve_uied(g, 1));
  EXPECT_TRUE(solve_uied(g, 2));
}

TEST(ApproxUivd, WithinSixTimesTheOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto p = oracle::perturbed(6 + static_cast<Vertex>(seed % 7), seed, 1 + static_cast<Vertex>(seed % 3));
    VertexSet a = approx_uivd(p.graph);
    EXPECT_TRUE(certified(without_vertices(p.graph, a)));
    EXPECT_LE(a.size(), 6 * oracle::brute_min_uivd(p.graph).value);
  }
}
