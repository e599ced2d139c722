#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "specturan/bounds.hpp"
#include "specturan/canonical.hpp"
#include "specturan/charpoly.hpp"
#include "specturan/families.hpp"
#include "specturan/motifs.hpp"
#include "specturan/spectral.hpp"

using namespace specturan;

namespace {

std::vector<std::size_t> sorted_degrees(const graph& g) {
  auto d = g.degree_sequence();
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace

TEST(Families, StarWithMatching) {
  const auto g = build<1>(family_spec::snk(9, 1));
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(g.size(), 9u);
  EXPECT_EQ(g.degree(0), 8u);
}

TEST(Families, SnkMinus) {
  const auto g = build<1>(family_spec::sn_k_minus(6, 2));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(sorted_degrees(g), (std::vector<std::size_t>{5, 4, 2, 2, 2, 1}));
  EXPECT_THROW(build<1>(family_spec::sn_k_minus(6, 3)), construction_error);
}

TEST(Families, G10Shape) {
  const auto g = build<1>(family_spec::g10(6));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(sorted_degrees(g), (std::vector<std::size_t>{4, 3, 2, 1, 1, 1}));
}

TEST(Families, G10QuotientDividesCharPoly) {
  for (std::int64_t m = 6; m <= 20; ++m) {
    const auto g = build<1>(family_spec::g10(m));
    EXPECT_TRUE(char_poly(g).divisible_by(instantiate(poly_spec::g10g(m)))) << m;
  }
}

TEST(Families, G10BelowStarWithTwoEdges) {
  const auto a = spectral_radius(build<4>(family_spec::g10(51)));
  const auto b = spectral_radius(build<4>(family_spec::snk(50, 2)));
  EXPECT_EQ(compare(a, b), -1);
}

TEST(Families, C5StarDot) {
  for (std::int64_t m : {6, 9, 15, 30}) {
    const auto g = build<1>(family_spec::c5_star_dot(m));
    EXPECT_EQ(g.order(), static_cast<std::size_t>(m));
    EXPECT_EQ(g.size(), static_cast<std::size_t>(m));
    const auto p = char_poly(g);
    EXPECT_TRUE(p.divisible_by(instantiate(poly_spec::c5_quotient(m)))) << m;
    EXPECT_FALSE(p.divisible_by(instantiate(poly_spec::eq9h1(m)))) << m;
    EXPECT_FALSE(is_bipartite(g));
    EXPECT_FALSE(contains_cycle(g, 4).has_value());
  }
}

TEST(Families, G11G12AreUnrealisableButCandidatesBuild) {
  EXPECT_THROW(build<1>(family_spec::g11(12)), construction_error);
  EXPECT_THROW(build<1>(family_spec::g12(12)), construction_error);
  for (std::int64_t m = 7; m <= 16; ++m) {
    const auto a = build<1>(family_spec::g11_candidate(m));
    const auto b = build<1>(family_spec::g12_candidate(m));
    EXPECT_EQ(a.size(), static_cast<std::size_t>(m));
    EXPECT_EQ(b.size(), static_cast<std::size_t>(m));
    EXPECT_TRUE(char_poly(a).divisible_by(instantiate(poly_spec::g11c_quotient(m)))) << m;
    EXPECT_TRUE(char_poly(b).divisible_by(instantiate(poly_spec::g12c_quotient(m)))) << m;
    EXPECT_FALSE(char_poly(a).divisible_by(instantiate(poly_spec::eq9h2(m))));
    EXPECT_FALSE(char_poly(b).divisible_by(instantiate(poly_spec::eq9h3(m))));
    EXPECT_FALSE(contains_cycle(a, 4).has_value());
    EXPECT_FALSE(is_bipartite(b));
  }
}

TEST(Families, ClosedFormsMatchConstruction) {
  const std::vector<family_spec> specs = {
      family_spec::path(7),          family_spec::cycle(8),          family_spec::star(5),
      family_spec::complete_bipartite(3, 4), family_spec::snk(11, 3), family_spec::sn_k(9, 3),
      family_spec::sn_k_minus(9, 2), family_spec::ct_plus(6),        family_spec::sk2(4),
      family_spec::sm_e(8),          family_spec::g10(12),           family_spec::g14(5, 2),
  };
  for (const auto& s : specs) {
    const auto g = build<4>(s);
    EXPECT_EQ(static_cast<std::int64_t>(g.order()), expected_order(s)) << s.to_string();
    EXPECT_EQ(static_cast<std::int64_t>(g.size()), expected_edges(s)) << s.to_string();
    EXPECT_EQ(build<4>(s), g) << "deterministic " << s.to_string();
  }
}

TEST(Families, CtPlusContainsItsMotif) {
  for (std::int64_t t = 3; t <= 8; ++t) {
    const auto g = build<1>(family_spec::ct_plus(t));
    EXPECT_TRUE(oracle::has_ct_plus(g, static_cast<std::size_t>(t)));
    EXPECT_TRUE(contains_ct_plus(g, static_cast<std::size_t>(t)).has_value());
  }
}

TEST(Families, RangeErrors) {
  EXPECT_THROW(build<1>(family_spec::cycle(2)), construction_error);
  EXPECT_THROW(build<1>(family_spec::snk(5, 3)), construction_error);
  EXPECT_THROW(build<1>(family_spec::g10(5)), construction_error);
  EXPECT_THROW(build<1>(family_spec::star(64)), construction_error);
  EXPECT_NO_THROW(build<4>(family_spec::star(64)));
  EXPECT_THROW(build<1>(family_spec{family::snk, {9}}), construction_error);
  EXPECT_FALSE(parse_family("NoSuchFamily").has_value());
  EXPECT_TRUE(parse_family("Snk").has_value());
}
