#include <gtest/gtest.h>

#include "toriclg/quotsing.hpp"

using namespace toriclg;

namespace {

// Brute-force age minimum straight from the definition: every nontrivial power j,
// every root exponent u coprime to the order of g^j.
Rational brute_min_age(const CyclicQuotient& q) {
  const Int n = q.order();
  std::optional<Rational> best;
  for (Int j = 1; j < n; ++j) {
    bool trivial = true;
    for (Int a : q.weights()) trivial = trivial && (j * a) % n == 0;
    if (trivial) continue;
    for (Int u = 1; u < n; ++u) {
      Int ord = n / std::gcd(n, j);
      if (std::gcd(u % ord, ord) != 1) continue;
      Rational s = 0;
      for (Int a : q.weights()) s += Rational((u * j * a) % n, n);
      if (!best || s < *best) best = s;
    }
  }
  return *best;
}

}  // namespace

TEST(Quotient, ParseAndPrint) {
  auto q = parse_quotient(" 1/5 ( 1, -1, 7 ) ");
  EXPECT_EQ(q.order(), 5);
  EXPECT_EQ(q.weights(), (std::vector<Int>{1, 4, 2}));
  EXPECT_EQ(q.str(), "1/5(1,4,2)");
  EXPECT_EQ(q.original_str(), "1/5(1,-1,7)");
  for (const char* bad : {"", "1/2", "2/3(1)", "1/x(1)", "1/2(1,,1)", "1/0(1)", "1/2(1"}) {
    try {
      parse_quotient(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Quotient, StatedExampleSingularities) {
  auto a = classify(parse_quotient("1/2(1,1,1)"));
  EXPECT_TRUE(a.is_terminal);
  EXPECT_FALSE(a.is_gorenstein);
  EXPECT_EQ(*a.min_age, Rational(3, 2));
  auto b = classify(parse_quotient("1/3(1,1,2)"));
  EXPECT_TRUE(b.is_terminal);
  EXPECT_EQ(*b.min_age, Rational(4, 3));
}

TEST(Quotient, SurfaceA1IsCanonicalNotTerminal) {
  auto c = classify(parse_quotient("1/2(1,1)"));
  EXPECT_FALSE(c.is_terminal);
  EXPECT_TRUE(c.is_canonical);
  EXPECT_TRUE(c.is_gorenstein);
}

TEST(Quotient, NonCanonical) {
  auto c = classify(parse_quotient("1/3(1,1)"));
  EXPECT_FALSE(c.is_canonical);
  EXPECT_EQ(*c.min_age, Rational(2, 3));
}

TEST(Quotient, QuasiReflectionRejected) {
  EXPECT_THROW(classify(parse_quotient("1/2(1,0,0)")), Error);
  try {
    classify(parse_quotient("1/4(2,0,1)"));  // g^2 = (0,0,1/2) fixes a hyperplane
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonSmallGroup);
  }
}

TEST(Quotient, TrivialGroupIsSmooth) {
  EXPECT_TRUE(classify(parse_quotient("1/1(0,0,0)")).is_smooth);
  EXPECT_TRUE(classify(parse_quotient("1/3(3,6,0)")).is_smooth);
}

TEST(Quotient, MinAgeMatchesDefinition) {
  for (Int n = 2; n <= 13; ++n)
    for (Int a = 1; a < n; ++a)
      for (Int b = 1; b < n; ++b) {
        if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1) continue;
        CyclicQuotient q(n, {1, a, b});
        EXPECT_EQ(*classify(q).min_age, brute_min_age(q)) << q.str();
      }
}

TEST(Quotient, TerminalLemmaThreefolds) {
  // terminal cyclic 3-fold points are 1/n(a, -a, 1) up to permutation and generator
  for (Int n = 2; n <= 11; ++n)
    for (Int a = 1; a < n; ++a)
      for (Int b = 1; b < n; ++b) {
        if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1) continue;
        CyclicQuotient q(n, {1, a, b});
        bool terminal = classify(q).is_terminal;
        bool pair = (1 + a) % n == 0 || (1 + b) % n == 0 || (a + b) % n == 0;
        EXPECT_EQ(terminal, pair) << q.str();
      }
}

TEST(Quotient, Age) {
  CyclicQuotient q(5, {1, 2, 3});
  EXPECT_EQ(age(q, 1, 1), Rational(6, 5));
  EXPECT_EQ(age(q, 2, 1), Rational(2, 5) + Rational(4, 5) + Rational(1, 5));
  EXPECT_EQ(age(q, 1, 2), age(q, 2, 1));
  EXPECT_THROW(age(q, 5, 1), Error);
  EXPECT_THROW(age(CyclicQuotient(6, {1, 5, 1}), 1, 2), Error);
  try {
    age(q, 0, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IdentityElement);
  }
}

TEST(Quotient, KawamataType) {
  auto q = kawamata_type(7, 3);
  EXPECT_EQ(q.str(), "1/7(3,4,1)");
  EXPECT_TRUE(classify(q).is_terminal);
  EXPECT_THROW(kawamata_type(6, 2), Error);
  EXPECT_THROW(kawamata_type(5, 5), Error);
}

TEST(Quotient, FromCone) {
  Cone c({LatticeVector({1, 1, 0}), LatticeVector({1, 0, 1}), LatticeVector({0, 1, 1})});
  auto d = quotient_from_cone(c);
  EXPECT_EQ(d.total_order(), 2);
  EXPECT_TRUE(same_group(d, as_decomposition(CyclicQuotient(2, {1, 1, 1}))));
  EXPECT_EQ(d.total_order(), cone_index(c));

  // <e1, e2, (1, 1, 2)>: the third coordinate is acted on by 1/2
  Cone w({LatticeVector({1, 0, 0}), LatticeVector({0, 1, 0}), LatticeVector({1, 1, 2})});
  EXPECT_TRUE(same_group(quotient_from_cone(w), as_decomposition(CyclicQuotient(2, {1, 1, 1}))));
  EXPECT_TRUE(quotient_from_cone(Cone({LatticeVector({1, 0}), LatticeVector({0, 1})})).is_trivial());

  Cone flat({LatticeVector({1, 0, 0}), LatticeVector({0, 1, 0})});
  EXPECT_THROW(quotient_from_cone(flat), Error);
}

TEST(Quotient, NonCyclicGroup) {
  // index 4 sublattice 2Z x 2Z: Z/2 x Z/2
  Cone c({LatticeVector({1, 1, 0}), LatticeVector({1, -1, 0}), LatticeVector({1, 0, 2})});
  auto d = quotient_from_cone(c);
  EXPECT_EQ(d.total_order(), cone_index(c));
  if (d.factors.size() > 1) {
    EXPECT_FALSE(cyclic_presentation(d).has_value());
  }
}

TEST(Quotient, CyclicPresentationPrefersGivenForm) {
  auto d = as_decomposition(CyclicQuotient(5, {1, 2, 3}));
  CyclicQuotient other(5, {2, 4, 6});  // the square of the generator
  auto p = cyclic_presentation(d, other);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->original_str(), "1/5(2,4,6)");
  EXPECT_FALSE(same_group(d, as_decomposition(CyclicQuotient(5, {1, 2, 4}))));
}

TEST(Quotient, HypersurfaceTags) {
  EXPECT_EQ(parse_hypersurface_type("cAx/4"), HypersurfaceType::cAx_4);
  EXPECT_EQ(to_string(HypersurfaceType::cD_3_2), "cD/3-2");
  EXPECT_FALSE(parse_hypersurface_type("cF/9"));
}
