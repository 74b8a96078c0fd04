#include <gtest/gtest.h>

#include "properties.hpp"

TEST(Properties, PeriodsInvariantUnderGLnZ) { EXPECT_EQ(props::gl_invariance(100, 6), ""); }

TEST(Properties, AgePairing) { EXPECT_EQ(props::age_pairing(50, 4), ""); }

TEST(Properties, CollinearStarSubdivisionsCommute) { EXPECT_EQ(props::collinear_order_independence(4), ""); }

TEST(Properties, LimitCommutesWithSeries) { EXPECT_EQ(props::limit_commutes(30, 6), ""); }

TEST(Properties, QuotientInvariantUnderConjugation) { EXPECT_EQ(props::classify_conjugation_invariance(200), ""); }

TEST(Properties, ConeIndexIsGroupOrder) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<toriclg::Int> c(-4, 4);
  for (int i = 0; i < 200; ++i) {
    std::vector<toriclg::LatticeVector> g;
    for (int r = 0; r < 3; ++r) g.push_back(toriclg::LatticeVector({c(rng), c(rng), c(rng)}));
    if (std::any_of(g.begin(), g.end(), [](const auto& v) { return v.is_zero(); }) || toriclg::linear_rank(g) < 3) continue;
    toriclg::Cone cone(g);
    if (!cone.is_simplicial()) continue;
    EXPECT_EQ(toriclg::quotient_from_cone(cone).total_order(), toriclg::cone_index(cone)) << cone.str();
  }
}
