#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pivotlab/anf.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/z4.hpp"

using namespace pivotlab;

namespace {

BooleanFunction F(std::string_view s) { return parse_anf(s); }

std::vector<std::uint32_t> terms_of(const BooleanFunction& f) { return {f.terms().begin(), f.terms().end()}; }

BooleanFunction random_function(std::mt19937_64& rng, int n) {
  std::vector<Mask> terms;
  for (Mask m = 0; m < bit(n); ++m)
    if (rng() & 1U) terms.push_back(m);
  return BooleanFunction(n, terms);
}

}  // namespace

TEST(Anf, AdditionIsInvolutiveAndCancels) {
  EXPECT_TRUE((F("n=2; x0*x1") + F("n=2; x0*x1")).is_zero());
  EXPECT_EQ(F("n=3; x0*x1+x1*x2") + F("n=3; x1*x2"), F("n=3; x0*x1"));
}

TEST(Anf, PivotFormulaExpandsOnPath) {
  // p + (x0+x1)(N0+N1) + N0N1 with N0 = 0, N1 = x2.
  const BooleanFunction p = F("n=3; x0*x1+x1*x2");
  const BooleanFunction n0(3);
  const BooleanFunction n1 = F("n=3; x2");
  const BooleanFunction q = p + (F("n=3; x0+x1") * (n0 + n1)) + n0 * n1;
  EXPECT_EQ(q, F("n=3; x0*x1+x0*x2"));
  for (Mask x = 0; x < 8; ++x) {
    const int n0v = 0;
    const int n1v = (x >> 2) & 1;
    const int expect = oracle::eval_terms(terms_of(p), x) ^ ((((x & 1) ^ ((x >> 1) & 1)) & (n0v ^ n1v))) ^ (n0v & n1v);
    EXPECT_EQ(q.evaluate(x), expect != 0);
  }
}

TEST(Anf, AddRejectsMismatchedSizes) {
  EXPECT_THROW(add(F("n=2; x0"), F("n=3; x0")), DimensionError);
  EXPECT_THROW(multiply(F("n=2; x0"), F("n=3; x0")), DimensionError);
}

TEST(Anf, Multiplication) {
  EXPECT_EQ(F("n=2; x0+x1") * F("n=2; x0+x1"), F("n=2; x0+x1"));
  EXPECT_EQ(F("n=2; x0") * F("n=2; x0*x1"), F("n=2; x0*x1"));
  const BooleanFunction prod = F("n=5; x1+x2") * F("n=5; x3+x4");
  EXPECT_EQ(prod, F("n=5; x1*x3+x1*x4+x2*x3+x2*x4"));
  for (Mask x = 0; x < 32; ++x)
    EXPECT_EQ(prod.evaluate(x), (((x >> 1) ^ (x >> 2)) & ((x >> 3) ^ (x >> 4)) & 1U) != 0);
}

TEST(Anf, ProductMatchesTruthTablesOnRandomInputs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const BooleanFunction a = random_function(rng, n);
    const BooleanFunction b = random_function(rng, n);
    const BooleanFunction s = a + b;
    const BooleanFunction p = a * b;
    for (Mask x = 0; x < bit(n); ++x) {
      const int av = oracle::eval_terms(terms_of(a), x);
      const int bv = oracle::eval_terms(terms_of(b), x);
      ASSERT_EQ(s.evaluate(x), (av ^ bv) != 0);
      ASSERT_EQ(p.evaluate(x), (av & bv) != 0);
    }
  }
}

TEST(Anf, TruthTableRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 7);
    const BooleanFunction f = random_function(rng, n);
    const auto table = f.truth_table();
    EXPECT_EQ(BooleanFunction::from_truth_table(n, table), f);
  }
}

TEST(Anf, Restriction) {
  EXPECT_TRUE(restrict_var(F("n=2; x0*x1+x1"), 1, false).is_zero());
  EXPECT_EQ(restrict_var(F("n=2; x0*x1+x1"), 1, true), F("n=2; x0+1"));
  const BooleanFunction p = F("n=3; x0*x1+x0*x2+x1*x2");
  const BooleanFunction m = restrict_var(p, 0, false) + restrict_var(p, 0, true) + F("n=3; x0+1");
  EXPECT_EQ(m, F("n=3; x0+x1+x2+1"));
  EXPECT_THROW(restrict_var(p, 3, true), RangeError);
}

TEST(Anf, Neighbourhood) {
  EXPECT_EQ(neighbourhood(F("n=3; x0*x1+x1*x2"), 1), F("n=3; x0+x2"));
  EXPECT_EQ(neighbourhood(F("n=4; x0*x1*x2+x0*x3"), 0), F("n=4; x1*x2+x3"));
  EXPECT_TRUE(neighbourhood(F("n=4; x1*x2"), 0).is_zero());
  EXPECT_THROW(neighbourhood(F("n=2; x0"), 2), RangeError);
}

TEST(Anf, TermRelations) {
  const BooleanFunction cubic = F("n=3; x0*x1*x2");
  EXPECT_FALSE(contains_term(cubic, Monomial{0, 1}));
  EXPECT_TRUE(is_multiplying_term(cubic, Monomial{0, 1}));
  EXPECT_TRUE(contains_term(F("n=2; x0*x1"), Monomial{0, 1}));
  const BooleanFunction f = F("n=4; x0*x1+x0*x1*x3");
  EXPECT_TRUE(is_multiplying_term(f + F("n=4; x0*x1"), Monomial{0, 1}));
}

TEST(Anf, StripAffine) {
  EXPECT_EQ(strip_affine(F("n=3; x0*x1+x2+1")), F("n=3; x0*x1"));
  EXPECT_EQ(F("n=3; x0*x1*x2+x0").degree(), 3);
  EXPECT_EQ(BooleanFunction(3).degree(), 0);
}

TEST(Anf, FamilyMembers) {
  const BooleanFunction zero3(3);
  EXPECT_EQ(family_member(3, 0, zero3, zero3), F("n=3; x0*x1+x0*x2+x1*x2"));
  const BooleanFunction zero4(4);
  EXPECT_EQ(family_member(4, 2, F("n=4; x0*x1"), zero4), F("n=4; x0*x2+x0*x3+x1*x2+x1*x3+x2*x3+x0*x1"));
  const BooleanFunction zero6(6);
  EXPECT_EQ(family_member(6, 3, F("n=6; x0*x1*x2"), zero6).degree(), 3);
  EXPECT_THROW(family_member(4, 2, F("n=4; x0*x2"), zero4), std::invalid_argument);
  EXPECT_THROW(family_member(4, 2, zero4, F("n=4; x0*x1")), std::invalid_argument);
}

TEST(Anf, TextFormat) {
  const BooleanFunction f = F(" n = 3 ;  x0 * x1 + x2 + 1 ");
  EXPECT_EQ(format_anf(f), "n=3; 1+x2+x0*x1");
  EXPECT_EQ(F(format_anf(f)), f);
  EXPECT_TRUE(F("n=2; 0").is_zero());
  EXPECT_THROW(F("n=2; x0*x0"), ParseError);
  EXPECT_THROW(F("n=2; x2"), ParseError);
  EXPECT_THROW(F("x0*x1"), ParseError);
}

TEST(Z4, LiftTakesEvenValues) {
  const Z4Function z = Z4Function::lift(F("n=2; x0*x1+x1"));
  for (Mask x = 0; x < 4; ++x) EXPECT_EQ(z(x), F("n=2; x0*x1+x1").evaluate(x) ? 2 : 0);
}

TEST(Z4, BracketReducesBeforeEmbedding) {
  // [x0 + x1] is 1 on exactly one of x0, x1 set: reduced over GF(2) first.
  const Z4Function z = Z4Function::embed(F("n=2; x0+x1"), 3);
  EXPECT_EQ(z(0), 0);
  EXPECT_EQ(z(1), 3);
  EXPECT_EQ(z(2), 3);
  EXPECT_EQ(z(3), 0);
  // Separately embedded terms add up in Z4 instead.
  const std::vector<BooleanFunction> parts{F("n=2; x0"), F("n=2; x1")};
  const Z4Function s = embedded_sum(2, parts, 3);
  EXPECT_EQ(s(3), 2);
}

TEST(Z4, ArithmeticAndRestriction) {
  const Z4Function a = Z4Function::embed(F("n=2; x0"));
  const Z4Function b = 3 * a;
  EXPECT_EQ((a + b)(1), 0);
  const Z4Function r = Z4Function::embed(F("n=2; x0*x1")).restricted(1, true);
  EXPECT_EQ(r(1), 1);
  EXPECT_EQ(r(3), 1);
  EXPECT_EQ(r(0), 0);
  EXPECT_THROW(a + Z4Function(3), DimensionError);
}
