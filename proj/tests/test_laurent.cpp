#include <gtest/gtest.h>

#include <random>

#include "toriclg/laurent.hpp"
#include "oracles.hpp"

using namespace toriclg;

TEST(Laurent, ParsePrint) {
  auto f = parse_laurent("x + y + 1/(x*y)");
  EXPECT_EQ(f.dim(), 2u);
  EXPECT_EQ(f.str(), "x^-1*y^-1 + y + x");
  auto g = parse_laurent("(1 + a*y)^2 / x", 2);
  EXPECT_EQ(g.params(), std::vector<std::string>{"a"});
  EXPECT_EQ(g.coefficient({-1, 1}).str({"a"}), "2*a");
  EXPECT_EQ(parse_laurent("x^-2*y^3"), parse_laurent("y^3/(x*x)"));
  EXPECT_EQ(parse_laurent("x1*x5").dim(), 5u);
}

TEST(Laurent, ParseErrors) {
  for (const char* bad : {"x +", "1/(x+y)", "(x+1)^-1", "x^a", "x**2", "3x", ""}) {
    try {
      parse_laurent(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Laurent, SmallPeriods) {
  auto p2 = period_coefficients(parse_laurent("x + y + 1/(x*y)"), 9);
  std::vector<Int> want{1, 0, 0, 6, 0, 0, 90, 0, 0, 1680};
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(p2.value(k), want[k]) << k;
  auto p1 = period_coefficients(parse_laurent("x + 1/x"), 8);
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(p1.value(k), k % 2 ? 0 : oracle::binomial(k, k / 2)) << k;
}

TEST(Laurent, OriginOutsideNewtonPolytope) {
  auto s = period_coefficients(parse_laurent("x + x*y + x/y"), 6);
  EXPECT_EQ(s.value(0), 1);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(s.value(k), 0);
}

TEST(Laurent, MatchesBruteForce) {
  const char* polys[] = {"x + y + 1/(x*y)", "x + y + z + 1/(x*y*z)", "x + 1/x + y + 1/y", "x + y + 1/(x*y) + 1/x",
                         "2*x + y/x + 1/y - 3", "x*y + 1/x + 1/y + x/y"};
  for (const char* p : polys) {
    auto f = parse_laurent(p);
    auto fast = period_coefficients(f, 6);
    auto slow = oracle::brute_periods(f, 6);
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(fast.value(k), slow[k]) << p << " k=" << k;
  }
}

TEST(Laurent, ParametrizedMatchesBruteForceAtSamples) {
  auto f = parse_laurent("x + a*y + 1/(x*y) + b");
  auto s = period_coefficients(f, 6);
  for (Int a : {0, 1, 2, -3})
    for (Int b : {0, 1, 5}) {
      auto fs = substitute_params(f, {{"a", Rational(a)}, {"b", Rational(b)}});
      auto slow = oracle::brute_periods(fs, 6);
      auto ss = substitute_params(s, {{"a", Rational(a)}, {"b", Rational(b)}});
      for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(ss.value(k), slow[k]);
    }
}

TEST(Laurent, SubstituteAndLimit) {
  auto f = parse_laurent("x + a*y + 1/(x*y)");
  EXPECT_EQ(limit_drop(f, "a"), parse_laurent("x + 1/(x*y)", 2));
  EXPECT_THROW(substitute_params(f, {{"q", Rational(1)}}), Error);
  auto g = substitute_params(f, {{"a", Rational(1, 2)}});
  EXPECT_TRUE(g.params().empty());
  EXPECT_EQ(g.coefficient({0, 1}).constant_value(), Rational(1, 2));
}

TEST(Laurent, UnimodularSubstitution) {
  auto f = parse_laurent("x + y + 1/(x*y)");
  auto m = IntMatrix::from_rows({{1, 1}, {0, 1}});
  auto g = unimodular_substitution(f, m);
  EXPECT_EQ(period_coefficients(g, 9), period_coefficients(f, 9));
  EXPECT_THROW(unimodular_substitution(f, IntMatrix::from_rows({{2, 0}, {0, 1}})), Error);
}

TEST(Laurent, NewtonPolytope) {
  auto v = newton_polytope(parse_laurent("x + y + 1/(x*y) + 1"));
  EXPECT_EQ(v.size(), 3u);
  EXPECT_THROW(newton_polytope(LaurentPoly(2, {})), Error);
}

TEST(Laurent, ProjectiveThreeSpaceClosedForm) {
  auto s = period_coefficients(parse_laurent("x + y + z + 1/(x*y*z)"), 20);
  for (std::size_t k = 0; k <= 20; ++k) {
    Rational want = k % 4 ? Rational(0) : Rational(oracle::multinomial_equal(4, k / 4));
    EXPECT_EQ(s.value(k), want) << k;
  }
  EXPECT_EQ(s.value(20), 11732745024);
}
