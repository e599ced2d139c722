#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "specturan/canonical.hpp"
#include "specturan/families.hpp"
#include "specturan/graph6.hpp"
#include "specturan/random.hpp"

using namespace specturan;

namespace {

template <std::size_t W, class Rng>
basic_graph<W> shuffled(const basic_graph<W>& g, Rng& rng) {
  std::vector<vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    const auto g = random_graph(2 + it % 12, 0.15 + 0.05 * (it % 10), rng);
    const auto c = certificate(g);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(certificate(shuffled(g, rng)), c) << graph6_encode(g);
  }
}

TEST(Canonical, CanonicalFormIsIsomorphicAndIdempotent) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 100; ++it) {
    const auto g = random_graph(1 + it % 9, 0.4, rng);
    const auto c = canonical_form(g);
    EXPECT_TRUE(oracle::isomorphic(g, c));
    EXPECT_EQ(canonical_form(c), c);
    const auto lab = canonical_labelling(g);
    std::vector<vertex> sorted = lab;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
  }
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  // Pairs of random graphs with equal order and size: equal certificates iff isomorphic.
  std::mt19937_64 rng(41);
  std::size_t iso_pairs = 0;
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = 4 + it % 4;
    const auto a = random_graph(n, 0.5, rng);
    auto b = random_graph(n, 0.5, rng);
    if (it % 3 == 0) b = shuffled(a, rng);
    if (a.size() != b.size()) continue;
    const bool same = certificate(a) == certificate(b);
    EXPECT_EQ(same, oracle::isomorphic(a, b)) << graph6_encode(a) << " " << graph6_encode(b);
    iso_pairs += same;
  }
  EXPECT_GT(iso_pairs, 50u);
}

TEST(Canonical, HardRegularCases) {
  // Cospectral / regular families where degree refinement alone says nothing.
  std::mt19937_64 rng(43);
  // Petersen graph vs a relabelled copy, and C6 vs 2C3.
  graph petersen(10);
  for (vertex i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);
    petersen.add_edge(i, i + 5);
    petersen.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  EXPECT_EQ(certificate(petersen), certificate(shuffled(petersen, rng)));
  graph c6(6);
  for (vertex i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  graph two_c3(6);
  for (vertex i = 0; i < 3; ++i) {
    two_c3.add_edge(i, (i + 1) % 3);
    two_c3.add_edge(3 + i, 3 + (i + 1) % 3);
  }
  EXPECT_NE(certificate(c6), certificate(two_c3));
  // K_{3,3} vs the prism: both cubic on 6 vertices.
  const auto k33 = build<1>(family_spec::complete_bipartite(3, 3));
  graph prism(6);
  for (vertex i = 0; i < 3; ++i) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(3 + i, 3 + (i + 1) % 3);
    prism.add_edge(i, 3 + i);
  }
  EXPECT_NE(certificate(k33), certificate(prism));
  EXPECT_EQ(certificate(prism), certificate(shuffled(prism, rng)));
}

TEST(Canonical, FamilyIdentity) {
  // G14((m-2)/2, 1) and Sn_k_minus((m+4)/2, 2) are the same graph.
  for (std::int64_t r = 2; r <= 15; ++r) {
    const auto a = build<1>(family_spec::g14(r, 1));
    const auto b = build<1>(family_spec::sn_k_minus(r + 3, 2));
    EXPECT_TRUE(isomorphic(a, b)) << r;
  }
  EXPECT_TRUE(oracle::isomorphic(build<1>(family_spec::g14(3, 1)), build<1>(family_spec::sn_k_minus(6, 2))));
}

TEST(Canonical, LargerRandomGraphsAcrossWidths) {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 10; ++it) {
    const auto g = random_graph<4>(40 + it * 5, 0.1, rng);
    EXPECT_EQ(certificate(g), certificate(shuffled(g, rng)));
  }
}
