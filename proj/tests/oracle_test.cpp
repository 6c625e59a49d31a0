#include "orient/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "orient/generators.hpp"
#include "orient/guard.hpp"
#include "support/test_support.hpp"

namespace orient {
namespace {

ForbiddenSets uniform_sets(const Graph& g, std::vector<int> values) {
  return ForbiddenSets(g, ForbiddenMode::OutDegree, std::vector<std::vector<int>>(g.num_vertices(), values));
}

// 2-connected: connected with at least 3 vertices and no cut vertex.
bool biconnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) return false;
  for (Vertex cut = -1; cut < n; ++cut) {
    std::vector<bool> seen(n, false);
    const Vertex start = cut == 0 ? 1 : 0;
    std::vector<Vertex> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        const Vertex w = g.other(e, v);
        if (w == cut || seen[w]) continue;
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached != (cut < 0 ? n : n - 1)) return false;
  }
  return true;
}

bool is_odd_cycle(const Graph& g) {
  if (g.num_vertices() % 2 == 0 || g.num_edges() != g.num_vertices()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

TEST(FindOrientationTest, CompleteFiveSharpness) {
  const Graph g = complete_graph(5);
  EXPECT_FALSE(find_orientation(g, uniform_sets(g, {2, 3})).has_value());
  const auto d = find_orientation(g, uniform_sets(g, {2}));
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(is_f_avoiding(*d, uniform_sets(g, {2})));
}

TEST(FindOrientationTest, TriangleCases) {
  const Graph g = cycle_graph(3);
  EXPECT_FALSE(find_orientation(g, uniform_sets(g, {1})).has_value());
  const ForbiddenSets f(g, ForbiddenMode::OutDegree, {{0}, {1}, {1}});
  const auto d = find_orientation(g, f);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(is_f_avoiding(*d, f));
}

TEST(FindOrientationTest, ImbalanceMode) {
  const Graph g = cycle_graph(3);
  const ForbiddenSets zero(g, ForbiddenMode::Imbalance, {{0}, {0}, {0}});
  EXPECT_FALSE(find_orientation(g, zero).has_value());
  const ForbiddenSets mixed(g, ForbiddenMode::Imbalance, {{0}, {0}, {2}});
  const auto d = find_orientation(g, mixed);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(is_f_avoiding(*d, mixed));
}

TEST(FindOrientationTest, GuardAndOverride) {
  if (guards_overridden()) GTEST_SKIP();
  const Graph g = complete_graph(8);  // 28 edges
  EXPECT_THROW(find_orientation(g, ForbiddenSets::none(g)), GuardExceeded);
  EXPECT_TRUE(find_orientation(g, ForbiddenSets::none(g), SearchLimits{28}).has_value());
}

TEST(FindOrientationTest, WitnessIsDeterministic) {
  const Graph g = complete_graph(6);
  const auto f = uniform_sets(g, {1, 4});
  const auto a = find_orientation(g, f);
  const auto b = find_orientation(g, f);
  ASSERT_TRUE(a && b);
  EXPECT_TRUE(std::equal(a->arcs().begin(), a->arcs().end(), b->arcs().begin(), b->arcs().end()));
}

TEST(FindOrientationTest, BiconnectedNonOddCyclesAreSingletonChoosable) {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (const Graph& g : testing::connected_graphs(7)) {
    if (!biconnected(g) || is_odd_cycle(g)) continue;
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = testing::random_forbidden(g, ForbiddenMode::OutDegree, std::vector<int>(g.num_vertices(), 1), rng);
      EXPECT_TRUE(find_orientation(g, f).has_value());
    }
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(FindOrientationTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_gnp(uniform_int(rng, 1, 7), 0.5, rng);
    if (g.num_edges() > 12) continue;
    const ForbiddenMode mode = trial % 2 == 0 ? ForbiddenMode::OutDegree : ForbiddenMode::Imbalance;
    std::vector<int> sizes(g.num_vertices());
    for (auto& s : sizes) s = uniform_int(rng, 0, 3);
    const auto f = testing::random_forbidden(g, mode, sizes, rng);
    const auto d = find_orientation(g, f);
    EXPECT_EQ(d.has_value(), testing::brute_force_avoiding_exists(g, f)) << "trial " << trial;
    if (d) {
      EXPECT_TRUE(is_f_avoiding(*d, f));
    }
  }
}

TEST(BFlowTest, SingleEdge) {
  const Graph g(2, {{0, 1}});
  const std::vector<int> b{1, -1};
  const auto phi = find_b_flow(g, 3, b);
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(*phi, std::vector<int>{1});
  const std::vector<int> zero{0, 0};
  EXPECT_FALSE(find_b_flow(g, 3, zero).has_value());
  const std::vector<int> unbalanced{1, 0};
  EXPECT_THROW(find_b_flow(g, 3, unbalanced), std::invalid_argument);
  EXPECT_THROW(find_b_flow(g, 7, b), std::invalid_argument);
}

TEST(BFlowTest, CompleteFourHasNoNowhereZeroThreeFlow) {
  const Graph g = complete_graph(4);
  const std::vector<int> zero(4, 0);
  EXPECT_FALSE(find_b_flow(g, 3, zero).has_value());
  const auto five = find_b_flow(g, 5, zero);
  ASSERT_TRUE(five.has_value());
  for (int x : *five) EXPECT_NE(x, 0);
  // Every other zero-sum boundary over Z_3 is realisable.
  int realised = 0;
  for (int code = 0; code < 27; ++code) {
    std::vector<int> b{code % 3, code / 3 % 3, code / 9, 0};
    b[3] = (6 - b[0] - b[1] - b[2]) % 3;
    if (code == 0) continue;
    if (find_b_flow(g, 3, b)) ++realised;
  }
  EXPECT_EQ(realised, 26);
}

TEST(BFlowTest, SolutionsSatisfyBoundary) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_gnp(uniform_int(rng, 2, 6), 0.6, rng);
    if (g.num_edges() > 10) continue;
    const int p = trial % 2 == 0 ? 3 : 5;
    std::vector<int> b(g.num_vertices());
    int sum = 0;
    for (Vertex v = 0; v + 1 < g.num_vertices(); ++v) {
      b[v] = uniform_int(rng, 0, p - 1);
      sum += b[v];
    }
    b.back() = ((-sum) % p + p) % p;
    const auto phi = find_b_flow(g, p, b);
    if (!phi) continue;
    std::vector<int> net(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_GE((*phi)[e], 1);
      EXPECT_LE((*phi)[e], p - 1);
      net[g.edge(e).u] += (*phi)[e];
      net[g.edge(e).v] -= (*phi)[e];
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(((net[v] - b[v]) % p + p) % p, 0);
  }
}

TEST(FrankGyarfasTest, Examples) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_gnp(uniform_int(rng, 1, 8), 0.5, rng);
    std::vector<int> lo(g.num_vertices(), 0);
    std::vector<int> hi(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) hi[v] = g.degree(v);
    EXPECT_TRUE(frank_gyarfas_check(g, lo, hi));
  }
  const Graph c3 = cycle_graph(3);
  const std::vector<int> ones(3, 1);
  EXPECT_TRUE(frank_gyarfas_check(c3, ones, ones));
  const Graph edge(2, {{0, 1}});
  const std::vector<int> one_each{1, 1};
  EXPECT_FALSE(frank_gyarfas_check(edge, one_each, one_each));
  const std::vector<int> backwards{2, 0};
  const std::vector<int> up{1, 1};
  EXPECT_THROW(frank_gyarfas_check(edge, backwards, up), std::invalid_argument);
}

TEST(FrankGyarfasTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_gnp(uniform_int(rng, 1, 6), 0.5, rng);
    std::vector<int> lo(g.num_vertices());
    std::vector<int> hi(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      lo[v] = uniform_int(rng, 0, g.degree(v));
      hi[v] = uniform_int(rng, lo[v], g.degree(v));
    }
    EXPECT_EQ(frank_gyarfas_check(g, lo, hi), testing::brute_force_bounded_exists(g, lo, hi)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace orient
