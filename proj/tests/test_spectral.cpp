#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specturan/bounds.hpp"
#include "specturan/canonical.hpp"
#include "specturan/families.hpp"
#include "specturan/graph6.hpp"
#include "specturan/random.hpp"
#include "specturan/spectral.hpp"

using namespace specturan;

namespace {

graph cycle_graph(std::size_t n) {
  graph g(n);
  for (vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<vertex>((i + 1) % n));
  return g;
}

certified_root exact_sqrt(std::int64_t k) { return algebraic_largest_root(int_poly::descending({1, 0, -k})); }

}  // namespace

TEST(Spectral, CycleHasRadiusTwo) {
  const auto sp = spectral_radius(cycle_graph(5));
  EXPECT_NEAR(sp.rho, 2.0, 1e-12);
  EXPECT_EQ(compare(sp.bracket, algebraic_largest_root(int_poly::descending({1, -2}))), 0);
  EXPECT_LE(sp.bracket.width(), rational(1, bigint(10000000000LL)));
}

TEST(Spectral, StarHasRadiusSqrtM) {
  for (std::int64_t m : {1, 2, 5, 16, 40}) {
    const auto sp = spectral_radius(build<4>(family_spec::star(m)));
    EXPECT_NEAR(sp.rho, std::sqrt(static_cast<double>(m)), 1e-10);
    EXPECT_EQ(compare(sp.bracket, exact_sqrt(m)), 0);
  }
}

TEST(Spectral, StarPlusEdgeHasRadiusThree) {
  const auto g = build<1>(family_spec::snk(9, 1));
  const auto sp = spectral_radius(g);
  EXPECT_NEAR(sp.rho, 3.0, 1e-10);
  EXPECT_LE(sp.hi() - sp.lo(), 1e-10);
  EXPECT_EQ(sp.ustar, 0u);
}

TEST(Spectral, PerronVectorProperties) {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 100; ++it) {
    const auto g = random_connected_graph(2 + it % 15, 0.3, rng);
    const auto sp = spectral_radius(g);
    double norm = 0;
    for (double x : sp.perron) {
      EXPECT_GT(x, 0.0);
      norm += x * x;
    }
    EXPECT_NEAR(norm, 1.0, 1e-9);
    EXPECT_LT(sp.residual, 1e-8);
    EXPECT_EQ(sp.component.size(), g.order());
    for (double x : sp.perron) EXPECT_LE(x, sp.perron[sp.ustar] + 1e-15);
    // bracket is consistent with an independent float estimate
    const double ref = oracle::power_iteration_rho(g);
    EXPECT_NEAR(sp.rho, ref, 1e-7);
    EXPECT_LE(sp.lo(), sp.rho + 1e-12);
    EXPECT_GE(sp.hi(), sp.rho - 1e-12);
  }
}

TEST(Spectral, DisconnectedGraphUsesAttainingComponent) {
  // K_{1,4} (rho 2) plus a triangle (rho 2) plus K_{1,2}: tie between the first two, lowest index wins.
  graph g(11);
  for (vertex i = 1; i <= 4; ++i) g.add_edge(0, i);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  g.add_edge(5, 7);
  g.add_edge(8, 9);
  g.add_edge(8, 10);
  const auto sp = spectral_radius(g);
  EXPECT_NEAR(sp.rho, 2.0, 1e-12);
  EXPECT_EQ(sp.component, (std::vector<vertex>{0, 1, 2, 3, 4}));
  for (vertex v = 5; v < 11; ++v) EXPECT_EQ(sp.perron[v], 0.0);
}

TEST(Spectral, EdgelessGraph) {
  const auto sp = spectral_radius(graph(3));
  EXPECT_EQ(sp.rho, 0.0);
}

TEST(Spectral, CertifiedComparison) {
  // sqrt(59) < rho(S^1_60) < sqrt(60) = rho(K_{1,60}); and rho(S^1_9) = rho(K_{1,9}) = 3 exactly.
  const auto a = spectral_radius(build<4>(family_spec::snk(60, 1)));
  const auto b = spectral_radius(build<4>(family_spec::star(60)));
  EXPECT_EQ(compare(a, b), -1);
  EXPECT_EQ(compare(b, a), 1);
  EXPECT_EQ(compare(spectral_radius(build<4>(family_spec::snk(9, 1))), spectral_radius(build<4>(family_spec::star(9)))),
            0);
  EXPECT_EQ(compare(a, a), 0);
}

TEST(Quotient, FiveCycleSingleCell) {
  const auto q = equitable_partition(cycle_graph(5));
  ASSERT_EQ(q.cells.size(), 1u);
  EXPECT_EQ(q.b, (int_matrix{{2}}));
}

TEST(Quotient, SnkMinusCells) {
  const auto g = build<1>(family_spec::sn_k_minus(6, 2));
  const auto q = equitable_partition(g);
  ASSERT_EQ(q.cells.size(), 4u);
  std::vector<std::size_t> sizes;
  for (const auto& c : q.cells) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 1, 3}));
  // The row of the full-degree vertex counts 1 + 3 + 1 neighbours in the other cells.
  bool found = false;
  for (std::size_t i = 0; i < q.cells.size(); ++i) {
    if (q.cells[i].size() != 1 || g.degree(q.cells[i][0]) != 5) continue;
    found = true;
    std::vector<std::int64_t> row = q.b[i];
    std::sort(row.begin(), row.end());
    EXPECT_EQ(row, (std::vector<std::int64_t>{0, 1, 1, 3}));
  }
  EXPECT_TRUE(found);
}

TEST(Quotient, EquitableByDefinitionAndDivides) {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 60; ++it) {
    const auto g = random_graph(3 + it % 10, 0.35, rng);
    const auto q = equitable_partition(g);
    EXPECT_TRUE(is_equitable(g, q.cells));
    for (std::size_t i = 0; i < q.cells.size(); ++i)
      for (vertex u : q.cells[i])
        for (std::size_t j = 0; j < q.cells.size(); ++j) {
          std::int64_t count = 0;
          for (vertex v : q.cells[j]) count += g.adjacent(u, v);
          EXPECT_EQ(count, q.b[i][j]);
        }
    EXPECT_TRUE(char_poly(g).divisible_by(characteristic_polynomial(q.b)));
  }
}

TEST(Quotient, SeededPartitionIsRefined) {
  const auto g = cycle_graph(6);
  const auto q = equitable_partition(g, std::vector<std::vector<vertex>>{{0}, {1, 2, 3, 4, 5}});
  EXPECT_EQ(q.cells.size(), 4u);
  EXPECT_TRUE(is_equitable(g, q.cells));
  EXPECT_THROW(equitable_partition(g, std::vector<std::vector<vertex>>{{0, 1}}), domain_error);
}

TEST(Quotient, G14Quotient) {
  for (auto [r, t] : std::vector<std::pair<int, int>>{{3, 1}, {4, 3}, {10, 1}}) {
    const auto g = build<4>(family_spec::g14(r, t));
    const std::int64_t m = 2 * r + t + 1;
    const auto f = int_poly::descending({1, 0, -m, -(m - t - 1), t * (m - t - 1) / 2});
    EXPECT_TRUE(char_poly(g).divisible_by(f)) << r << "," << t;
    const auto q = equitable_partition(g);
    EXPECT_EQ(q.cells.size(), 4u);
    EXPECT_EQ(characteristic_polynomial(q.b), f);
    const auto root = algebraic_largest_root(f, rational(1, bigint(1) << 50));
    EXPECT_NEAR(root.value(), spectral_radius(g).rho, 1e-9);
  }
}

TEST(Rotation, PathToStar) {
  graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  const auto before = spectral_radius(p4);
  EXPECT_NEAR(before.rho, (1 + std::sqrt(5.0)) / 2, 1e-10);
  EXPECT_NEAR(before.perron[1], before.perron[2], 1e-12);
  const auto k13 = rotate_edges(p4, 2, 1, vertex_set<1>{3});
  EXPECT_EQ(k13.degree(1), 3u);
  const auto after = spectral_radius(k13);
  EXPECT_NEAR(after.rho, std::sqrt(3.0), 1e-10);
  EXPECT_EQ(compare(after, before), 1);
  EXPECT_EQ(rotate_edges(p4, 2, 1, vertex_set<1>{}), p4);
}

TEST(Rotation, PreconditionErrors) {
  graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  EXPECT_THROW(rotate_edges(p4, 2, 1, vertex_set<1>{0}), rotation_error);  // 0 is not a neighbour of 2
  EXPECT_THROW(rotate_edges(p4, 1, 2, vertex_set<1>{2}), rotation_error);
  EXPECT_THROW(rotate_edges(p4, 1, 1, vertex_set<1>{}), rotation_error);
  EXPECT_NO_THROW(rotate_edges(p4, 2, 3, vertex_set<1>{1}));
}

TEST(Rotation, MovingWPendantToCentre) {
  // Star with two matched leaf pairs, minus one leaf, with a pendant hung on a matched leaf:
  // moving that pendant to the centre gives S^2_{m-1}.
  const std::int64_t m = 10;
  auto g = build<1>(family_spec::snk(m - 1, 2));
  const vertex leaf = static_cast<vertex>(g.order() - 1);
  g.remove_edge(0, leaf);
  g.add_edge(1, leaf);
  ASSERT_EQ(g.size(), static_cast<std::size_t>(m));
  const auto sp = spectral_radius(g);
  ASSERT_GE(sp.perron[0], sp.perron[1]);
  const auto h = rotate_edges(g, 1, 0, vertex_set<1>{leaf});
  EXPECT_TRUE(isomorphic(h, build<1>(family_spec::snk(m - 1, 2))));
  EXPECT_EQ(compare(spectral_radius(h), sp), 1);
}

TEST(Rotation, MonotonicityProperty) {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (int it = 0; it < 300 && checked < 150; ++it) {
    const auto g = random_connected_graph(4 + it % 7, 0.3, rng);
    const auto sp = spectral_radius(g);
    std::uniform_int_distribution<vertex> pick(0, static_cast<vertex>(g.order() - 1));
    vertex u = pick(rng);
    vertex v = pick(rng);
    if (u == v) continue;
    if (sp.perron[u] < sp.perron[v]) std::swap(u, v);
    auto candidates = g.neighbors(v) - g.neighbors(u);
    candidates.erase(u);
    if (candidates.empty()) continue;
    vertex_set<1> moved;
    candidates.for_each([&](vertex w) {
      if (moved.empty() || rng() % 2) moved.insert(w);
    });
    const auto h = rotate_edges(g, v, u, moved);
    EXPECT_EQ(compare(spectral_radius(h), sp), 1) << graph6_encode(g) << " u=" << u << " v=" << v;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}
