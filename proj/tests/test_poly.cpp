#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "specturan/charpoly.hpp"
#include "specturan/families.hpp"
#include "specturan/poly.hpp"
#include "specturan/random.hpp"

using namespace specturan;

TEST(IntPoly, ArithmeticAndNormalisation) {
  const auto p = int_poly::descending({1, -1, -8, 6});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.eval(bigint(3)), 0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(int_poly::descending({0, 0, 1, 2}).degree(), 1);
  const auto q = int_poly::descending({1, -3});
  EXPECT_EQ((p * q).degree(), 4);
  EXPECT_TRUE((p * q).divisible_by(q));
  EXPECT_TRUE((p * q).divisible_by(p));
  EXPECT_EQ(p.to_string(), "x^3 - x^2 - 8x + 6");
  EXPECT_EQ(p.derivative(), int_poly::descending({3, -2, -8}));
}

TEST(IntPoly, DivisionExactness) {
  const auto x2m1 = int_poly::descending({1, 0, -1});
  EXPECT_TRUE(x2m1.divisible_by(int_poly::descending({1, 1})));
  EXPECT_FALSE(x2m1.divisible_by(int_poly::descending({2, 1})));
  EXPECT_FALSE(int_poly::descending({1, 0, 1}).divisible_by(int_poly::descending({1, -1})));
}

TEST(IntPoly, GcdOfProducts) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int it = 0; it < 50; ++it) {
    auto rnd = [&](int deg) {
      std::vector<bigint> c;
      c.push_back(1);
      for (int i = 0; i < deg; ++i) c.push_back(coef(rng));
      return int_poly::descending(c);
    };
    const auto common = rnd(2);
    const auto a = rnd(2) * common;
    const auto b = rnd(3) * common;
    const auto g = gcd(a, b);
    EXPECT_GE(g.degree(), 2);
    EXPECT_TRUE(a.divisible_by(g));
    EXPECT_TRUE(b.divisible_by(g));
    EXPECT_TRUE(g.divisible_by(common.primitive()) || common.divisible_by(g));
  }
}

TEST(CharPoly, SmallKnownGraphs) {
  graph k2(2);
  k2.add_edge(0, 1);
  EXPECT_EQ(characteristic_polynomial(k2), int_poly::descending({1, 0, -1}));
  graph c4(4);
  for (vertex i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  EXPECT_EQ(characteristic_polynomial(c4), int_poly::descending({1, 0, -4, 0, 0}));
}

TEST(CharPoly, MatchesFaddeevLeVerrierOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    const auto g = random_graph(2 + it % 14, 0.35, rng);
    const auto p = characteristic_polynomial(g);
    const auto ref = oracle::faddeev_leverrier(oracle::adjacency(g));
    EXPECT_EQ(p.descending_coeffs(), ref) << g.order();
  }
}

TEST(CharPoly, MatchesLeibnizDeterminantPointwise) {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 12; ++it) {
    const auto g = random_graph(3 + it % 5, 0.5, rng);
    const auto p = characteristic_polynomial(g);
    for (long long x = -3; x <= 3; ++x) EXPECT_EQ(p.eval(bigint(x)), oracle::charpoly_at(g, x));
  }
}

TEST(CharPoly, LargeGraphAgainstBareiss) {
  // 40 vertices: compare modular result with a fraction-free determinant at a few points.
  std::mt19937_64 rng(23);
  const auto g = random_graph(40, 0.2, rng);
  const auto p = characteristic_polynomial(g);
  const auto a = adjacency_matrix(g);
  for (long long x : {-2LL, 0LL, 1LL, 5LL}) {
    int_matrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? x : 0) - a[i][j];
    EXPECT_EQ(p.eval(bigint(x)), bareiss_determinant(m));
  }
}

TEST(CertifiedRoot, BracketsTheLargestRoot) {
  const auto p = int_poly::descending({1, -1, -8, 6});
  for (auto how : {root_counting::sturm, root_counting::descartes}) {
    const auto r = certified_root::largest(p, how, rational(1, bigint(1) << 40));
    EXPECT_LT(r.lo(), 3);
    EXPECT_GE(r.hi(), 3);
    EXPECT_LE(r.width(), rational(1, bigint(1) << 40));
  }
}

TEST(CertifiedRoot, ExactEqualityThroughGcd) {
  // 3 is the largest root of both x^2 - 9 and x^3 - x^2 - 8x + 6.
  const auto a = certified_root::largest(int_poly::descending({1, 0, -9}), root_counting::sturm, rational(1, 1024));
  const auto b = certified_root::largest(int_poly::descending({1, -1, -8, 6}), root_counting::sturm, rational(1, 1024));
  EXPECT_EQ(compare(a, b), 0);
  // sqrt(2) vs 1.41421356237 (a nearby rational root).
  const auto s2 = certified_root::largest(int_poly::descending({1, 0, -2}), root_counting::sturm, rational(1, 1024));
  const auto near = certified_root::largest(int_poly::descending({100000000000LL, -141421356237LL}),
                                            root_counting::sturm, rational(1, 1024));
  EXPECT_EQ(compare(s2, near), 1);
  EXPECT_EQ(compare(near, s2), -1);
}

TEST(CertifiedRoot, RepeatedLargestRoot) {
  // (x - 2)^2 (x + 1)
  const auto p = int_poly::descending({1, -2}) * int_poly::descending({1, -2}) * int_poly::descending({1, 1});
  const auto r = certified_root::largest(p, root_counting::sturm, rational(1, 1 << 20));
  const auto two = certified_root::largest(int_poly::descending({1, -2}), root_counting::sturm, rational(1, 4));
  EXPECT_EQ(compare(r, two), 0);
}

TEST(CertifiedRoot, RejectsPolynomialsWithoutRealRoots) {
  EXPECT_THROW(certified_root::largest(int_poly::descending({1, 0, 1}), root_counting::sturm, rational(1, 8)),
               domain_error);
  EXPECT_THROW(certified_root::largest(int_poly::constant(3), root_counting::sturm, rational(1, 8)), domain_error);
}
