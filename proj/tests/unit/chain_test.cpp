#include <gtest/gtest.h>

#include "amcurve/chain.hpp"
#include "oracles.hpp"

using namespace amcurve;

namespace {

const CoeffDomain kQ = CoeffDomain::rational();

BiPoly P(const char* text, const CoeffDomain& dom = kQ) { return parse_bipoly(text, dom); }
UniPoly U(const char* text, const CoeffDomain& dom = kQ) { return parse_unipoly(text, dom); }

CharSequence seq(std::initializer_list<long> r) {
  std::vector<Integer> v;
  for (long x : r) v.emplace_back(x);
  return CharSequence(v);
}

ChainAtInfinity build(std::initializer_list<long> r, const CoeffDomain& dom = kQ) {
  return build_chain(AmSequence::certify(seq(r)), dom);
}

std::vector<std::int64_t> values(const std::vector<IntersectionNumber>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

Rational q(long a, long b) { return Rational(a, b); }

}  // namespace

TEST(BuildChain, FourTwoSeven) {
  const ChainAtInfinity c = build({4, 2, 7});
  ASSERT_EQ(c.polys().size(), 3u);
  EXPECT_EQ(c.f(1), P("y"));
  EXPECT_EQ(c.f(2), P("y^2 - x"));
  EXPECT_EQ(c.f(3), P("(y^2 - x)^2 - y"));
  EXPECT_EQ(c.param().x, U("t^4 - t"));
  EXPECT_EQ(c.param().y, U("t^2"));
  EXPECT_EQ(c.degrees(), (std::vector<std::int64_t>{1, 2, 4}));
}

TEST(BuildChain, GraphCase) {
  const ChainAtInfinity c = build({3, 2});
  EXPECT_EQ(c.f(2), P("y^3 - x"));
  EXPECT_EQ(c.param().x, U("t^3"));
  EXPECT_EQ(c.param().y, U("t"));
}

TEST(BuildChain, SixFourSeventeen) {
  const ChainAtInfinity c = build({6, 4, 17});
  EXPECT_EQ(c.ratios(), (std::vector<std::int64_t>{3, 2}));
  EXPECT_EQ(c.degrees(), (std::vector<std::int64_t>{1, 3, 6}));
}

TEST(BuildChain, Rejections) {
  EXPECT_THROW(build({1}), InvalidSequence);
  EXPECT_THROW(AmSequence::certify(seq({6, 2, 21})), InvalidSequence);
}

TEST(BuildChain, InvariantsInAnyCharacteristic) {
  for (const auto& dom : {kQ, CoeffDomain::prime_field(2), CoeffDomain::prime_field(3), CoeffDomain::prime_field(7)}) {
    for (long n = 2; n <= 16; ++n) {
      for (const auto& r : enumerate_am(Integer(n))) {
        const ChainAtInfinity c = build_chain(r, dom);
        const auto& p = c.param();
        EXPECT_TRUE(substitute(c.polys().back(), p.x, p.y).is_zero());
        EXPECT_EQ(std::max(p.x.degree(), p.y.degree()), Degree(n));
        for (std::size_t k = 1; k <= c.length(); ++k) {
          EXPECT_EQ(c.f(k).degree(), Degree(n / c.dchain()[k - 1]));
          EXPECT_EQ(substitute(c.f(k), p.x, p.y).degree(), Degree(c.dchain()[k]));
        }
        EXPECT_EQ(c.realized_sequence(), r.terms());
      }
    }
  }
}

TEST(Parametrize, Examples) {
  const Scalar one = Scalar::one(kQ);
  const AutoWord w(kQ, {Move::elem_x(U("-t^2")), Move::affine(-one, Scalar(), Scalar(), one, Scalar(), Scalar())});
  ASSERT_EQ(w.first(), P("y^2 - x"));
  ASSERT_EQ(w.second(), P("y"));
  const Parametrization p = parametrize(w);
  EXPECT_EQ(p.x, U("t^2"));
  EXPECT_EQ(p.y, U("t"));
  const ChainAtInfinity c = build({4, 2, 7});
  const Parametrization p3 = parametrize(c.pair_witnesses().back());
  EXPECT_EQ(p3.x, U("t^4 - t"));
  EXPECT_EQ(p3.y, U("t^2"));
}

TEST(Intersection, LedgerExamples) {
  const ChainAtInfinity c = build({4, 2, 7});
  EXPECT_EQ(intersection_at_infinity(P("y"), c).value(), 2);
  EXPECT_EQ(intersection_at_infinity(P("y^2 - x"), c).value(), 7);
  EXPECT_EQ(intersection_at_infinity(P("1"), c).value(), 0);
  EXPECT_TRUE(intersection_at_infinity(c.f(3), c).is_infinite());
  EXPECT_TRUE(intersection_at_infinity(c.f(3) * P("x + 2"), c).is_infinite());
  EXPECT_THROW(intersection_at_infinity(BiPoly(kQ), c), std::invalid_argument);
  const ChainAtInfinity g = build({3, 2});
  EXPECT_EQ(intersection_at_infinity(P("x"), g).value(), 0);
  EXPECT_EQ(intersection_at_infinity(P("y"), g).value(), 2);
  EXPECT_EQ(IntersectionNumber::infinite().to_string(), "inf");
  EXPECT_THROW(IntersectionNumber::infinite().value(), std::logic_error);
}

TEST(Intersection, NegativeMeansWrongDegree) {
  const Parametrization p{U("t^4 - t"), U("t^2")};
  EXPECT_THROW(bezout_intersection(P("x"), 2, p), ChainError);
}

TEST(Verify, FourTwoSeven) {
  const ChainAtInfinity c = build({4, 2, 7});
  const IntersectionReport rep = verify_theorem(c, seq({4, 2, 7}));
  EXPECT_TRUE(rep.all()) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_EQ(values(rep.intersections), (std::vector<std::int64_t>{2, 7}));
  EXPECT_EQ(values(rep.pairwise), (std::vector<std::int64_t>{1, 7}));
  EXPECT_EQ(rep.extracted, (std::vector<std::int64_t>{4, 2, 7}));
  EXPECT_EQ(*rep.dlambda[0][1], q(1, 2));
  EXPECT_EQ(*rep.dlambda[0][2], q(1, 2));
  EXPECT_EQ(*rep.dlambda[1][2], q(7, 8));
  EXPECT_FALSE(rep.dlambda[1][1].has_value());
  EXPECT_TRUE(dlambda_matches_closed_form(rep));
}

TEST(Verify, SixFourSeventeen) {
  const IntersectionReport rep = verify_theorem(build({6, 4, 17}), seq({6, 4, 17}));
  EXPECT_TRUE(rep.all());
  EXPECT_EQ(values(rep.intersections), (std::vector<std::int64_t>{4, 17}));
  EXPECT_EQ(values(rep.pairwise), (std::vector<std::int64_t>{2, 17}));
  EXPECT_EQ(*rep.dlambda[0][1], q(2, 3));
  EXPECT_EQ(*rep.dlambda[1][2], q(17, 18));
  EXPECT_TRUE(dlambda_matches_closed_form(rep));
}

TEST(Verify, GraphCase) {
  const IntersectionReport rep = verify_theorem(build({3, 2}), seq({3, 2}));
  EXPECT_TRUE(rep.all());
  EXPECT_EQ(values(rep.intersections), (std::vector<std::int64_t>{2}));
}

TEST(Verify, WrongSequenceIsReported) {
  const IntersectionReport rep = verify_theorem(build({6, 4, 17}), seq({6, 3, 11}));
  EXPECT_FALSE(rep.all());
  EXPECT_FALSE(rep.failures.empty());
}

TEST(Ultrametric, DetectsViolation) {
  IntersectionReport rep;
  rep.dlambda = {{std::nullopt, q(1, 2), q(1, 3)}, {q(1, 2), std::nullopt, q(1, 4)}, {q(1, 3), q(1, 4), std::nullopt}};
  const UltrametricResult res = ultrametric_check(rep);
  EXPECT_FALSE(res.ok);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(*res.witness, (std::array<std::size_t, 3>{1, 2, 3}));
  rep.dlambda[1][2] = rep.dlambda[2][1] = q(1, 3);
  EXPECT_TRUE(ultrametric_check(rep).ok);
}

TEST(Ultrametric, HoldsOnEveryChain) {
  for (long n = 2; n <= 20; ++n) {
    for (const auto& r : enumerate_am(Integer(n))) {
      const IntersectionReport rep = verify_theorem(build_chain(r, kQ), r.sequence());
      EXPECT_TRUE(ultrametric_check(rep).ok) << r.sequence().to_string();
      EXPECT_TRUE(dlambda_matches_closed_form(rep)) << r.sequence().to_string();
    }
  }
}

TEST(RoundTrip, DecomposeRecoversChain) {
  for (const auto& dom : {kQ, CoeffDomain::prime_field(2), CoeffDomain::prime_field(5)}) {
    for (long n = 2; n <= 16; ++n) {
      for (const auto& r : enumerate_am(Integer(n))) {
        const ChainAtInfinity built = build_chain(r, dom);
        const AutoWord& w = built.pair_witnesses().back();
        const ChainSkeleton sk = decompose_line(w.first(), w.second());
        const ChainAtInfinity back = chain_from_skeleton(sk);
        EXPECT_EQ(back.degrees(), built.degrees());
        EXPECT_EQ(back.realized_sequence(), r.terms());
        EXPECT_TRUE(verify_theorem(back, r.sequence()).all()) << r.sequence().to_string() << " over " << dom.name();
      }
    }
  }
}

TEST(Oracle, SmallMonomials) {
  const ChainAtInfinity c = build({4, 2, 7});
  const auto samples = semigroup_sampling_oracle(c, 0, 3, 42);
  ASSERT_EQ(samples.size(), 10u);  // monomials of degree <= 3
  EXPECT_EQ(samples[0].poly, "1");
  EXPECT_EQ(samples[0].value.value(), 0);
  EXPECT_EQ(samples[1].poly, "x");
  EXPECT_EQ(samples[1].value.value(), 0);
  EXPECT_EQ(samples[2].poly, "y");
  EXPECT_EQ(samples[2].value.value(), 2);
  EXPECT_EQ(samples[4].poly, "x*y");
  EXPECT_EQ(samples[4].value.value(), 2);
  EXPECT_EQ(samples[5].poly, "y^2");
  EXPECT_EQ(samples[5].value.value(), 4);
  const auto verdict = check_oracle_membership(samples, NumericalSemigroup::generate(std::vector<std::uint64_t>{4, 2, 7}));
  EXPECT_TRUE(verdict.ok());
}

TEST(Oracle, DeterministicBySeed) {
  const ChainAtInfinity c = build({6, 4, 17});
  const auto a = semigroup_sampling_oracle(c, 50, 4, 9);
  const auto b = semigroup_sampling_oracle(c, 50, 4, 9);
  const auto other = semigroup_sampling_oracle(c, 50, 4, 10);
  ASSERT_EQ(a.size(), b.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].poly, b[i].poly);
    EXPECT_EQ(a[i].value, b[i].value);
    differs = differs || a[i].poly != other[i].poly;
  }
  EXPECT_TRUE(differs);
}

TEST(Oracle, FlagsNonMembers) {
  std::vector<OracleSample> samples{{"1", 0, IntersectionNumber(0)}, {"y", 1, IntersectionNumber(5)}};
  const auto verdict = check_oracle_membership(samples, NumericalSemigroup::generate(std::vector<std::uint64_t>{4, 2, 7}));
  EXPECT_FALSE(verdict.ok());
  ASSERT_EQ(verdict.non_members.size(), 1u);
  EXPECT_EQ(verdict.non_members[0].poly, "y");
  samples.erase(samples.begin());
  samples[0].value = IntersectionNumber(4);
  EXPECT_FALSE(check_oracle_membership(samples, NumericalSemigroup::generate(std::vector<std::uint64_t>{4, 2, 7})).ok());
}

TEST(Oracle, AttainedValuesAreMembersAndReachGenerators) {
  // The echelon oracle sees every leading t-degree of the linear span, not
  // only the sampled polynomials.
  for (long n = 2; n <= 12; ++n) {
    for (const auto& r : enumerate_am(Integer(n))) {
      const ChainAtInfinity c = build_chain(r, kQ);
      const auto g = NumericalSemigroup::generate(r.terms());
      const auto attained = oracle::attained_values(c.param(), n, static_cast<std::uint32_t>(n));
      for (auto v : attained) {
        ASSERT_GE(v, 0);
        EXPECT_TRUE(g.contains(static_cast<std::uint64_t>(v))) << v << " from " << r.sequence().to_string();
      }
      // r_k is attained by f_k, whose degree n/d_k <= n.
      for (const auto& rk : r.terms()) EXPECT_TRUE(attained.count(rk.get_si())) << rk.get_str();
    }
  }
}
