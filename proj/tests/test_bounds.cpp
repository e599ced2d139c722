#include <gtest/gtest.h>

#include <cmath>

#include "specturan/bounds.hpp"
#include "specturan/families.hpp"
#include "specturan/spectral.hpp"

using namespace specturan;

TEST(Bounds, Lemma22AtNineHasRootThree) {
  const auto r = largest_root(poly_spec::lemma22(9, 1));
  EXPECT_NEAR(r.value, 3.0, 1e-10);
  EXPECT_EQ(compare(r.bracket, certified_root::largest(int_poly::descending({1, -3}), root_counting::sturm,
                                                       rational(1, 8))),
            0);
}

TEST(Bounds, Lemma22RootBrackets) {
  // sqrt(m-k) < root <= sqrt(m) for k = 1..3 over a range of m.
  for (std::int64_t m = 9; m <= 60; ++m)
    for (std::int64_t k = 1; k <= 3; ++k) {
      if (m < 4 * k + 5) continue;
      const auto r = largest_root(poly_spec::lemma22(m, k)).bracket;
      EXPECT_EQ(compare(r, bound::sqrt_m_minus(m, k).exact()), 1) << m << "," << k;
      EXPECT_LE(compare(r, bound::sqrt_m(m).exact()), 0) << m << "," << k;
    }
}

TEST(Bounds, Lemma22MatchesStarWithMatching) {
  for (std::int64_t m = 9; m <= 30; m += 3)
    for (std::int64_t k = 1; k <= 3; ++k) {
      if (m <= 3 * k) continue;  // no pendant leaf left: the factor x is missing
      const auto g = build<4>(family_spec::snk(m - k + 1, k));
      ASSERT_EQ(static_cast<std::int64_t>(g.size()), m);
      EXPECT_TRUE(char_poly(g).divisible_by(instantiate(poly_spec::lemma22(m, k)))) << m << "," << k;
    }
}

TEST(Bounds, Lemma47fAtEight) {
  const auto r = largest_root(poly_spec::lemma47f(8, 1));
  EXPECT_NEAR(r.value, 3.10201, 5e-5);
  EXPECT_GT(r.value, 3.0981);
  EXPECT_EQ(compare(r.bracket, bound::golden45(8).exact()), 1);
  EXPECT_THROW(instantiate(poly_spec::lemma47f(9, 1)), domain_error);
  EXPECT_NO_THROW(instantiate(poly_spec::lemma47f(9, 2)));
  EXPECT_THROW(instantiate(poly_spec::lemma47f(8, 8)), domain_error);
}

TEST(Bounds, PolynomialIdentities) {
  for (std::int64_t m = 6; m <= 80; ++m) {
    const auto h1 = instantiate(poly_spec::eq9h1(m));
    const auto f = instantiate(poly_spec::lemma22(m, 2));
    EXPECT_EQ(combine(h1, f, combine_op::sub_x_times), int_poly::descending({-(2 * m - 9), m - 5}));
    EXPECT_EQ(instantiate(poly_spec::subcase_h(m)), int_poly::descending({1, -2, -(m - 4), 2 * m - 7}));
    EXPECT_EQ(*printed_variant(poly_spec::subcase_h(m)), int_poly::descending({1, -2, -(m - 8), 2 * m - 7}));
    EXPECT_TRUE(combine(h1, h1, combine_op::sub).is_zero());
  }
  EXPECT_FALSE(printed_variant(poly_spec::lemma22(9, 1)).has_value());
}

TEST(Bounds, ClosedForms) {
  EXPECT_NEAR(bound::golden43(9).value(), 3.37228, 1e-5);
  EXPECT_NEAR(bound::golden45(74).value(), (1 + std::sqrt(291.0)) / 2, 1e-12);
  EXPECT_EQ(bound::sqrt_m_minus(51, 2).value(), 7.0);
  EXPECT_EQ(compare(bound::sqrt_m_minus(51, 2).exact(),
                    certified_root::largest(int_poly::descending({1, -7}), root_counting::sturm, rational(1, 8))),
            0);
  EXPECT_NEAR(bound::nosal_like(10).value(), 3.0, 1e-15);
  EXPECT_NEAR(bound::golden45(74).exact().value(), bound::golden45(74).value(), 1e-10);
  EXPECT_THROW(bound::sqrt_m_minus(3, 5).value(), domain_error);
  EXPECT_THROW(bound::golden45(1).value(), domain_error);
}

TEST(Bounds, DiscrepancyWarnings) {
  EXPECT_EQ(known_discrepancies(51).size(), 4u);
  EXPECT_EQ(warnings_for(poly_spec::subcase_h(51)).size(), 1u);
  EXPECT_EQ(warnings_for(poly_spec::eq9h3(51)).size(), 2u);
  EXPECT_TRUE(warnings_for(poly_spec::lemma22(51, 1)).empty());
  // The printed h3 evaluated at sqrt(m-2): m - 6 - (2m - 6) sqrt(m-2).
  for (std::int64_t m : {11, 18, 51}) {
    const double s = std::sqrt(static_cast<double>(m - 2));
    const auto h3 = instantiate(poly_spec::eq9h3(m));
    double v = 0;
    for (const auto& c : h3.descending_coeffs()) v = v * s + static_cast<double>(c);
    EXPECT_NEAR(v, static_cast<double>(m - 6) - static_cast<double>(2 * m - 6) * s, 1e-8 * m * m);
  }
}

TEST(Bounds, ParameterErrors) {
  EXPECT_THROW(instantiate(poly_spec{poly_kind::lemma22, {9}}), domain_error);
  EXPECT_THROW(instantiate(poly_spec::lemma22(0, 1)), domain_error);
  EXPECT_THROW(largest_root(poly_spec::lemma22(9, 1), 0.0), domain_error);
  EXPECT_TRUE(parse_poly_kind("Lemma22").has_value());
  EXPECT_FALSE(parse_poly_kind("Nope").has_value());
}
