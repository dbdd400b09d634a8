#include <random>

#include <gtest/gtest.h>

#include "amcurve/poly.hpp"
#include "oracles.hpp"

using namespace amcurve;

namespace {

const CoeffDomain kQ = CoeffDomain::rational();

BiPoly P(const char* text, const CoeffDomain& dom = kQ) { return parse_bipoly(text, dom); }

}  // namespace

TEST(Degree, ZeroPolynomialIsNegInfinity) {
  EXPECT_TRUE(UniPoly(kQ).degree().is_neg_infinity());
  EXPECT_TRUE(BiPoly(kQ).degree().is_neg_infinity());
  EXPECT_LT(Degree::neg_infinity(), Degree(0));
  EXPECT_TRUE((Degree::neg_infinity() + Degree(5)).is_neg_infinity());
  EXPECT_THROW(Degree::neg_infinity().value(), std::logic_error);
  EXPECT_EQ(Degree::neg_infinity().to_string(), "-inf");
}

TEST(BiPolyTest, CancellationDropsTerms) {
  const BiPoly f = P("x^2 + y") - P("x^2");
  EXPECT_EQ(f, P("y"));
  EXPECT_TRUE((f - f).is_zero());
}

TEST(BiPolyTest, LeadingForm) {
  EXPECT_EQ(P("(y^2 - x)^2 - y").leading_form(), P("y^4"));
  EXPECT_EQ(P("x^3 + x*y^2 + y").leading_form(), P("x^3 + x*y^2"));
  EXPECT_THROW(BiPoly(kQ).leading_form(), std::invalid_argument);
}

TEST(BiPolyTest, PrintsGradedLexHighestFirst) {
  EXPECT_EQ(P("(y^2-x)^2-y").to_string(), "y^4 - 2*x*y^2 + x^2 - y");
  EXPECT_EQ(P("3/4*x - 1").to_string(), "3/4*x - 1");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("-x^2*y").to_string(), "-x^2*y");
}

TEST(BiPolyTest, FrobeniusInCharP) {
  const auto f2 = CoeffDomain::prime_field(2);
  EXPECT_EQ(P("(x + y)^2", f2), P("x^2 + y^2", f2));
  const auto f3 = CoeffDomain::prime_field(3);
  EXPECT_EQ(P("(x + y)^3", f3), P("x^3 + y^3", f3));
}

TEST(BiPolyTest, Derivatives) {
  EXPECT_EQ(P("x^3*y^2 + y").derivative_x(), P("3*x^2*y^2"));
  EXPECT_EQ(P("x^3*y^2 + y").derivative_y(), P("2*x^3*y + 1"));
  EXPECT_TRUE(P("x^2", CoeffDomain::prime_field(2)).derivative_x().is_zero());
}

TEST(Substitute, NagataIdentityOverF2) {
  // (y^2 - x^3)(t^4, t + t^6) = t^2 in characteristic 2, and its square is x(t).
  const auto f2 = CoeffDomain::prime_field(2);
  const UniPoly xt = parse_unipoly("t^4", f2);
  const UniPoly yt = parse_unipoly("t + t^6", f2);
  const UniPoly inner = substitute(P("y^2 - x^3", f2), xt, yt);
  EXPECT_EQ(inner, parse_unipoly("t^2", f2));
  EXPECT_EQ(inner.pow(2), xt);
}

TEST(Substitute, RingHomomorphism) {
  std::mt19937_64 rng(11);
  for (const auto& dom : {kQ, CoeffDomain::prime_field(7)}) {
    for (int i = 0; i < 60; ++i) {
      const BiPoly f = oracle::random_bipoly(rng, dom, 4, 4);
      const BiPoly g = oracle::random_bipoly(rng, dom, 4, 4);
      const UniPoly xt = oracle::random_unipoly(rng, dom, 3);
      const UniPoly yt = oracle::random_unipoly(rng, dom, 3);
      const auto s = [&](const BiPoly& h) { return substitute(h, xt, yt); };
      EXPECT_EQ(s(f + g), s(f) + s(g));
      EXPECT_EQ(s(f * g), s(f) * s(g));
      EXPECT_EQ(s(BiPoly::constant(Scalar::one(dom))), UniPoly::constant(Scalar::one(dom)));
    }
  }
}

TEST(Substitute, AgreesWithPointEvaluation) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const BiPoly h = oracle::random_bipoly(rng, kQ, 5, 5);
    const BiPoly X = oracle::random_bipoly(rng, kQ, 2, 3);
    const BiPoly Y = oracle::random_bipoly(rng, kQ, 2, 3);
    const Scalar a = oracle::random_scalar(rng, kQ);
    const Scalar b = oracle::random_scalar(rng, kQ);
    EXPECT_EQ(evaluate(substitute(h, X, Y), a, b), evaluate(h, evaluate(X, a, b), evaluate(Y, a, b)));
  }
}

TEST(Substitute, DomainMismatchThrows) {
  const auto f5 = CoeffDomain::prime_field(5);
  EXPECT_THROW(substitute(P("x"), UniPoly::variable(f5), UniPoly::variable(f5)), DomainMismatch);
  EXPECT_THROW(P("x") + P("x", f5), DomainMismatch);
}

TEST(UniPolyTest, ComposeAndPow) {
  const UniPoly t = UniPoly::variable(kQ);
  const UniPoly p = parse_unipoly("t^2 + 1", kQ);
  EXPECT_EQ(evaluate(p, t + Scalar::one(kQ)), parse_unipoly("t^2 + 2*t + 2", kQ));
  EXPECT_EQ(p.pow(0), UniPoly::constant(Scalar::one(kQ)));
  EXPECT_EQ(p.pow(3).degree(), Degree(6));
  EXPECT_EQ(parse_unipoly("t^6 + t", kQ).to_string(), "t^6 + t");
  EXPECT_EQ(parse_unipoly("y^2 - 3", kQ, 'y').to_string('y'), "y^2 - 3");
}
