#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "specturan/families.hpp"
#include "specturan/graph6.hpp"
#include "specturan/motifs.hpp"
#include "specturan/random.hpp"

using namespace specturan;

namespace {

graph complete_graph(std::size_t n) {
  graph g(n);
  for (vertex i = 0; i < n; ++i)
    for (vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

graph wheel(std::size_t rim) {
  graph g(rim + 1);
  for (vertex i = 1; i <= rim; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % rim + 1);
  }
  return g;
}

std::vector<std::string> shapes(const graph& g, vertex u) {
  std::vector<std::string> out;
  for (const auto& c : classify_neighborhood_components(g, u)) out.push_back(c.cls.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Motifs, AgreeWithBruteForce) {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 150; ++it) {
    const auto g = random_graph(4 + it % 6, 0.2 + 0.05 * (it % 8), rng);
    for (std::size_t t = 3; t <= std::min<std::size_t>(g.order(), 7); ++t) {
      const auto c = contains_cycle(g, t);
      EXPECT_EQ(c.has_value(), oracle::has_cycle(g, t)) << graph6_encode(g) << " t=" << t;
      if (c) EXPECT_TRUE(verify_witness(g, *c));
      if (t < g.order()) {
        const auto p = contains_ct_plus(g, t);
        EXPECT_EQ(p.has_value(), oracle::has_ct_plus(g, t)) << graph6_encode(g) << " t=" << t << "+";
        if (p) EXPECT_TRUE(verify_witness(g, *p));
      }
    }
  }
}

TEST(Motifs, KnownCases) {
  EXPECT_TRUE(contains_cycle(complete_graph(4), 3).has_value());
  EXPECT_TRUE(contains_cycle(complete_graph(4), 4).has_value());
  EXPECT_FALSE(contains_cycle(build<1>(family_spec::cycle(6)), 4).has_value());
  EXPECT_TRUE(contains_cycle(build<1>(family_spec::cycle(6)), 6).has_value());
  EXPECT_TRUE(contains_cycle(build<1>(family_spec::sn_k(6, 2)), 4).has_value());

  graph diamond(4);
  diamond.add_edge(0, 1);
  diamond.add_edge(1, 2);
  diamond.add_edge(2, 0);
  diamond.add_edge(3, 0);
  diamond.add_edge(3, 1);
  const auto w = contains_ct_plus(diamond, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->name(), "C3+");
  EXPECT_TRUE(verify_witness(diamond, *w));

  EXPECT_FALSE(contains_ct_plus(build<1>(family_spec::sn_k_minus(6, 2)), 5).has_value());
  EXPECT_FALSE(contains_ct_plus(build<1>(family_spec::sn_k_minus(6, 2)), 4).has_value());
  EXPECT_TRUE(contains_ct_plus(wheel(5), 5).has_value());
  EXPECT_FALSE(contains_ct_plus(build<1>(family_spec::cycle(5)), 5).has_value());
}

TEST(Motifs, WitnessCheckerRejectsBadWitnesses) {
  const auto c5 = build<1>(family_spec::cycle(5));
  EXPECT_TRUE(verify_witness(c5, motif_witness{motif_kind::cycle, 5, {0, 1, 2, 3, 4}}));
  EXPECT_FALSE(verify_witness(c5, motif_witness{motif_kind::cycle, 5, {0, 2, 1, 3, 4}}));
  EXPECT_FALSE(verify_witness(c5, motif_witness{motif_kind::cycle, 5, {0, 1, 2, 3}}));
  EXPECT_FALSE(verify_witness(c5, motif_witness{motif_kind::cycle, 4, {0, 1, 2, 2}}));
  EXPECT_FALSE(verify_witness(c5, motif_witness{motif_kind::ct_plus, 4, {0, 1, 2, 3, 4}}));
}

TEST(Motifs, NeighbourhoodShapes) {
  EXPECT_EQ(shapes(wheel(4), 0), (std::vector<std::string>{"C4Spanning(C4)"}));
  EXPECT_EQ(shapes(complete_graph(5), 0), (std::vector<std::string>{"C4Spanning(K4)"}));

  auto s91 = shapes(build<1>(family_spec::snk(9, 1)), 0);
  EXPECT_EQ(std::count(s91.begin(), s91.end(), "Star(1)"), 1);
  EXPECT_EQ(std::count(s91.begin(), s91.end(), "Star(0)"), 6);
  EXPECT_EQ(s91.size(), 7u);

  const auto s14 = shapes(build<1>(family_spec::g14(3, 1)), 0);
  EXPECT_EQ(s14, (std::vector<std::string>{"Star(0)", "Star(3)"}));

  // A neighbourhood inducing P4 is a double star with one leaf on each side.
  graph fan(5);
  for (vertex v = 1; v <= 4; ++v) fan.add_edge(0, v);
  fan.add_edge(1, 2);
  fan.add_edge(2, 3);
  fan.add_edge(3, 4);
  EXPECT_EQ(shapes(fan, 0), (std::vector<std::string>{"DoubleStar(1,1)"}));
}
