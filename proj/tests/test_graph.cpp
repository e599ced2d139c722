#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "specturan/families.hpp"
#include "specturan/graph.hpp"
#include "specturan/graph6.hpp"
#include "specturan/random.hpp"

using namespace specturan;

namespace {

graph cycle_graph(std::size_t n) {
  graph g(n);
  for (vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<vertex>((i + 1) % n));
  return g;
}

graph complete_graph(std::size_t n) {
  graph g(n);
  for (vertex i = 0; i < n; ++i)
    for (vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST(Graph, AddRemoveEdges) {
  graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  g.add_edge(0, 1);
  EXPECT_EQ(g.size(), 2u);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  graph g(3);
  EXPECT_ANY_THROW(g.add_edge(1, 1));
  EXPECT_ANY_THROW(g.add_edge(0, 3));
}

TEST(Graph, DegreeIntoSubset) {
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(degree_in(c5, 0, c5.vertices()), 2u);
  const auto k13 = build<1>(family_spec::star(3));
  EXPECT_EQ(degree_in(k13, 0, vertex_set<1>{1, 2, 3}), 3u);
  graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  EXPECT_EQ(degree_in(p4, 1, vertex_set<1>{0, 3}), 1u);
}

TEST(Graph, EdgeCounts) {
  const auto k4 = complete_graph(4);
  EXPECT_EQ(edge_count(k4, k4.vertices(), k4.vertices()), 6u);
  EXPECT_EQ(edge_count(k4, k4.vertices()), 6u);
  const auto c4 = cycle_graph(4);
  const vertex_set<1> a{0, 2};
  const vertex_set<1> b{1, 3};
  EXPECT_EQ(edge_count(c4, a, b), 4u);
  EXPECT_EQ(edge_count(c4, a), 0u);
  const auto s62 = build<1>(family_spec::sn_k(6, 2));
  const vertex_set<1> k2{0, 1};
  EXPECT_EQ(edge_count(s62, k2, s62.vertices() - k2), 8u);
}

TEST(Graph, StrataOfStarWithMatching) {
  const auto g = build<1>(family_spec::snk(9, 1));
  const auto st = strata(g, 0);
  EXPECT_EQ(st.n1().size(), 2u);
  EXPECT_EQ(st.n0().size(), 6u);
  EXPECT_TRUE(st.far.empty());
  EXPECT_TRUE(st.second.empty());
}

TEST(Graph, StrataOfFiveCycle) {
  const auto c5 = cycle_graph(5);
  for (vertex u = 0; u < 5; ++u) {
    const auto st = strata(c5, u);
    EXPECT_EQ(st.n0().size(), 2u);
    EXPECT_EQ(st.second.size(), 2u);
    EXPECT_EQ(st.far.size(), 2u);
    EXPECT_EQ(st.second, st.far);
  }
}

TEST(Graph, StrataOfC5StarDot) {
  // The star centre of C5StarDot(9) has two cycle neighbours and four leaves.
  const auto g = build<1>(family_spec::c5_star_dot(9));
  ASSERT_EQ(g.order(), 9u);
  const auto st = strata(g, 0);
  EXPECT_EQ(st.open.size(), 6u);
  EXPECT_EQ(st.n0().size(), 6u);
  EXPECT_EQ(st.far.size(), 2u);
  st.far.for_each([&](vertex w) { EXPECT_EQ(g.degree(w), 2u); });
}

TEST(Graph, StrataPartitionTheVertexSet) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const auto g = random_connected_graph(10, 0.3, rng);
    for (vertex u = 0; u < g.order(); ++u) {
      const auto st = strata(g, u);
      EXPECT_EQ(st.closed.size() + st.far.size(), g.order());
      EXPECT_FALSE(st.far.intersects(st.closed));
      std::size_t layered = 0;
      for (const auto& layer : st.by_inner_degree) layered += layer.size();
      EXPECT_EQ(layered, st.open.size());
      EXPECT_TRUE(st.second.subset_of(st.far));
    }
  }
}

TEST(Graph, Bipartition) {
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_TRUE(cut_vertices(cycle_graph(6)).empty());
  const auto r = bipartition(cycle_graph(5));
  EXPECT_FALSE(r.bipartite);
  ASSERT_EQ(r.odd_cycle.size() % 2, 1u);
  for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
    EXPECT_TRUE(cycle_graph(5).adjacent(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
}

TEST(Graph, PendantOnPendantIsCutVertex) {
  const auto g = build<1>(family_spec::sm_e(7));
  const auto cuts = cut_vertices(g);
  bool subdivided_leaf = false;
  cuts.for_each([&](vertex v) { subdivided_leaf = subdivided_leaf || g.degree(v) == 2; });
  EXPECT_TRUE(subdivided_leaf);
}

TEST(Graph, CutVerticesMatchRemovalOracle) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    const auto g = random_graph(9, 0.25, rng);
    const auto cuts = cut_vertices(g);
    const auto base = components(g).size();
    for (vertex v = 0; v < g.order(); ++v) {
      auto rest = g.vertices();
      rest.erase(v);
      const auto h = induced_subgraph(g, rest);
      const bool is_cut = components(h).size() > base - (g.degree(v) == 0 ? 1 : 0);
      EXPECT_EQ(cuts.contains(v), is_cut) << graph6_encode(g) << " v=" << v;
    }
  }
}

TEST(Graph6, KnownEncodings) {
  graph k2(2);
  k2.add_edge(0, 1);
  EXPECT_EQ(graph6_encode(k2), "A_");
  const auto g = graph6_decode("D?{");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(graph6_encode(g), "D?{");
  EXPECT_EQ(graph6_decode("Dhc").size(), 5u);
}

TEST(Graph6, BitLayoutOracle) {
  // Upper triangle in column order, six bits per byte, offset 63.
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    const auto g = random_graph(1 + it % 20, 0.4, rng);
    std::vector<int> bits;
    for (vertex j = 1; j < g.order(); ++j)
      for (vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
    while (bits.size() % 6) bits.push_back(0);
    std::string s(1, static_cast<char>(63 + g.order()));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
      int v = 0;
      for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
      s.push_back(static_cast<char>(63 + v));
    }
    EXPECT_EQ(graph6_encode(g), s);
  }
}

TEST(Graph6, RoundTripIncludingLongHeader) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {0u, 1u, 2u, 30u, 62u, 63u, 64u}) {
    const auto g = random_graph(n, 0.3, rng);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  }
  const auto big = random_graph<4>(200, 0.05, rng);
  EXPECT_EQ(graph6_decode<4>(graph6_encode(big)), big);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(graph6_decode(""), parse_error);
  EXPECT_THROW(graph6_decode("D?"), parse_error);
  EXPECT_THROW(graph6_decode("A_x"), parse_error);
  EXPECT_THROW(graph6_decode("A\x01"), parse_error);
  // 100 vertices do not fit a 64-vertex graph.
  EXPECT_THROW(graph6_decode<1>(graph6_encode(basic_graph<2>(100))), parse_error);
}

TEST(Graph, RelabelPreservesStructure) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    const auto g = random_graph(8, 0.4, rng);
    std::vector<vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    EXPECT_EQ(h.size(), g.size());
    EXPECT_TRUE(oracle::isomorphic(g, h));
  }
}
