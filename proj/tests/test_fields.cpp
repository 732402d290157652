#include <gtest/gtest.h>

#include "hos/hos.hpp"
#include "support/oracles.hpp"

using namespace hos;

namespace {

Tower q_sqrt(long d, const Tower& base = Tower::rationals()) { return adjoin(base, FieldElement(d)); }

FieldElement gen(const Tower& t, std::size_t i = 0) { return FieldElement::generator(t, i); }

FieldElement rat(long p, long q = 1) { return FieldElement(Rational(p, q)); }

}  // namespace

TEST(FieldArithmetic, RationalSum) { EXPECT_EQ(rat(1, 2) + rat(1, 3), rat(5, 6)); }

TEST(FieldArithmetic, RootTwoSquared) {
  Tower t = q_sqrt(2);
  FieldElement r = gen(t);
  EXPECT_EQ(r * r, FieldElement::rational(2, t));
}

TEST(FieldArithmetic, InverseOfOnePlusRootTwo) {
  Tower t = q_sqrt(2);
  FieldElement x = FieldElement::rational(1, t) + gen(t);
  FieldElement inv = x.inverse();
  EXPECT_EQ(inv, gen(t) - FieldElement::rational(1, t));
  EXPECT_EQ(oracle::schoolbook(inv, x), FieldElement::rational(1, t));
}

TEST(FieldArithmetic, DivisionByZeroThrows) {
  Tower t = q_sqrt(2);
  EXPECT_THROW(FieldElement(t).inverse(), DivisionByZero);
  EXPECT_THROW(rat(1) / rat(0), DivisionByZero);
}

TEST(FieldArithmetic, UnrelatedTowersDoNotMix) {
  FieldElement a = gen(q_sqrt(2)), b = gen(q_sqrt(3));
  EXPECT_THROW(a + b, TowerMismatch);
  EXPECT_THROW(a * b, TowerMismatch);
}

TEST(FieldArithmetic, ResultStaysInOperandTower) {
  Tower t = q_sqrt(2);
  FieldElement a = gen(t) + rat(1), b = gen(t) - rat(3);
  EXPECT_EQ((a * b).tower(), t);
  EXPECT_EQ((a + b).tower(), t);
  EXPECT_EQ((a / b).tower(), t);
}

TEST(FieldArithmetic, MatchesSchoolbookProduct) {
  Rng rng(11);
  for (std::size_t depth = 0; depth <= 3; ++depth) {
    Tower t = random_hilbert_tower(rng, depth);
    for (int k = 0; k < 40; ++k) {
      FieldElement a = random_element(rng, t), b = random_element(rng, t);
      EXPECT_EQ(a * b, oracle::schoolbook(a, b)) << t.id();
    }
  }
}

TEST(FieldArithmetic, LowerStageOperandMatchesSchoolbook) {
  Rng rng(12);
  Tower t = random_hilbert_tower(rng, 3);
  for (int k = 0; k < 40; ++k) {
    FieldElement a = random_element(rng, t), b = random_element(rng, t.prefix(k % 3));
    EXPECT_EQ(a * b, oracle::schoolbook(a, b));
    EXPECT_EQ(b * a, oracle::schoolbook(a, b));
  }
}

TEST(FieldProperties, AxiomsOnRandomElements) {
  Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    Tower t = random_hilbert_tower(rng, trial % 4);
    FieldElement a = random_element(rng, t), b = random_element(rng, t), c = random_element(rng, t);
    FieldElement one = FieldElement::rational(1, t), zero(t);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a + (-a), zero);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), one);
  }
}

TEST(Merge, WithRationalsIsIdentity) {
  Tower t = q_sqrt(2);
  MergeResult m = merge_towers(t, Tower::rationals());
  EXPECT_EQ(m.tower, t);
  FieldElement x = gen(t) + rat(3);
  EXPECT_EQ(apply(m.from_first, x), x);
  EXPECT_EQ(apply(m.from_second, rat(7, 2)), FieldElement::rational(Rational(7, 2), t));
}

TEST(Merge, SameGeneratorIsDetected) {
  Tower a = q_sqrt(2), b = q_sqrt(2);
  MergeResult m = merge_towers(a, b);
  EXPECT_EQ(m.tower.depth(), 1u);
  FieldElement image = apply(m.from_second, gen(b));
  EXPECT_EQ(image * image, FieldElement::rational(2, m.tower));
}

TEST(Merge, IndependentGeneratorsStack) {
  Tower a = q_sqrt(2), b = q_sqrt(3);
  // 3 is not a square in Q(sqrt 2): (x + y sqrt 2)^2 = 3 has no rational solution
  EXPECT_TRUE(oracle::rational_roots_of_square(3).empty());
  EXPECT_FALSE(is_square(FieldElement::rational(3, a)));
  MergeResult m = merge_towers(a, b);
  EXPECT_EQ(m.tower.depth(), 2u);
  FieldElement s3 = apply(m.from_second, gen(b));
  EXPECT_EQ(s3 * s3, FieldElement::rational(3, m.tower));
}

TEST(Merge, SelfMergeKeepsDepth) {
  Rng rng(5);
  for (std::size_t d = 0; d <= 3; ++d) {
    Tower t = random_hilbert_tower(rng, d);
    EXPECT_EQ(merge_towers(t, t).tower.depth(), t.depth());
  }
}

TEST(Merge, DepthLimit) {
  Tower a = adjoin(Tower::rationals(1), FieldElement(2));
  Tower b = q_sqrt(3);
  EXPECT_THROW(merge_towers(a, b), DepthLimitExceeded);
}

TEST(Squares, RationalSquare) {
  auto r = is_square(rat(4));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, rat(2));
}

TEST(Squares, TwoIsNotARationalSquare) {
  EXPECT_TRUE(oracle::rational_roots_of_square(2).empty());
  EXPECT_FALSE(is_square(rat(2)));
}

TEST(Squares, ThreePlusTwoRootTwo) {
  Tower t = q_sqrt(2);
  FieldElement x = FieldElement::rational(3, t) + rat(2) * gen(t);
  auto r = is_square(x);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, FieldElement::rational(1, t) + gen(t));
  EXPECT_EQ(oracle::schoolbook(*r, *r), x);
}

TEST(Squares, AgreesWithRationalRootTest) {
  for (long p = -30; p <= 30; ++p)
    for (long q = 1; q <= 12; ++q) {
      Rational x(p, q);
      x.canonicalize();
      EXPECT_EQ(is_square(FieldElement(x)).has_value(), !oracle::rational_roots_of_square(x).empty()) << x;
    }
}

TEST(Squares, SquaresAreRecovered) {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    Tower t = random_hilbert_tower(rng, trial % 4);
    FieldElement x = random_element(rng, t);
    auto r = is_square(x * x);
    ASSERT_TRUE(r) << x.to_string();
    EXPECT_EQ(*r * *r, x * x);
    EXPECT_GE(sign(*r), 0);
    EXPECT_EQ(*r, abs(x));
  }
}

TEST(Sign, Examples) {
  Tower t = q_sqrt(2);
  FieldElement r = gen(t);
  EXPECT_EQ(sign(FieldElement(t)), 0);
  EXPECT_EQ(sign(r - rat(1)), 1);
  EXPECT_EQ(sign(rat(1) - r), -1);
  // 1.41 < sqrt 2 < 1.42
  EXPECT_EQ(sign(r - rat(141, 100)), 1);
  EXPECT_EQ(sign(rat(142, 100) - r), 1);
}

TEST(Sign, AgreesWithHighPrecisionEvaluation) {
  Rng rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    Tower t = random_hilbert_tower(rng, trial % 4);
    FieldElement x = random_element(rng, t);
    EXPECT_EQ(sign(x), oracle::numeric_sign(x)) << x.to_string() << " in " << t.id();
    EXPECT_EQ(sign(x) == 0, x.is_zero());
  }
}

TEST(Sign, NearCancellation) {
  // 99/70 approximates sqrt 2 to 1e-4; 665857/470832 to 1e-12
  Tower t = q_sqrt(2);
  EXPECT_EQ(sign(gen(t) - FieldElement(Rational(99, 70))), -1);
  EXPECT_EQ(sign(gen(t) - FieldElement(Rational(665857, 470832))), -1);
  EXPECT_EQ(sign(gen(t) - FieldElement(Rational(1393, 985))), 1);
}

TEST(Hypot, Examples) {
  HypotResult h = hypot(rat(3), rat(4));
  EXPECT_EQ(h.value, rat(5));
  EXPECT_EQ(h.tower.depth(), 0u);
  EXPECT_EQ(hypot(rat(1), rat(0)).value, rat(1));
  HypotResult s = hypot(rat(1), rat(1));
  EXPECT_EQ(s.tower.depth(), 1u);
  EXPECT_EQ(s.tower.discriminant(0), rat(2));
  EXPECT_EQ(s.value * s.value, FieldElement::rational(2, s.tower));
  EXPECT_EQ(sign(s.value), 1);
}

TEST(Hypot, ScaleIsPulledOut) {
  // hypot(2, 2) = 2 sqrt 2 over the squarefree discriminant 2
  HypotResult h = hypot(rat(2), rat(2));
  EXPECT_EQ(h.tower.discriminant(0), rat(2));
  EXPECT_EQ(h.value, rat(2) * gen(h.tower));
}

TEST(Hypot, DefiningEquationOnRandomInputs) {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    Tower t = random_hilbert_tower(rng, trial % 3);
    FieldElement a = random_element(rng, t), b = random_element(rng, t);
    HypotResult h = hypot(a, b);
    EXPECT_EQ(h.value * h.value, a * a + b * b);
    EXPECT_GE(sign(h.value), 0);
    EXPECT_TRUE(t.is_prefix_of(h.tower));
    EXPECT_LE(h.tower.depth(), t.depth() + 1);
  }
}

TEST(Hypot, DepthLimit) {
  Tower t = Tower::rationals(0);
  EXPECT_THROW(hypot(FieldElement::rational(1, t), FieldElement::rational(1, t)), DepthLimitExceeded);
}

TEST(Hypot, AdjoinRejectsDegenerateDiscriminants) {
  EXPECT_THROW(adjoin(Tower::rationals(), rat(4)), DomainError);
  EXPECT_THROW(adjoin(Tower::rationals(), rat(-2)), DomainError);
  Tower t = q_sqrt(2);
  EXPECT_THROW(adjoin(t, FieldElement::rational(8, t)), DomainError);
}

TEST(FormalReality, SumsOfSquaresArePositive) {
  Rng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    Tower t = random_hilbert_tower(rng, trial % 4);
    FieldElement s(t);
    std::size_t k = 1 + rng.below(5);
    for (std::size_t i = 0; i < k; ++i) {
      FieldElement x = random_nonzero_element(rng, t);
      s += x * x;
    }
    EXPECT_EQ(sign(s), 1);
  }
}

TEST(Parse, Examples) {
  ParsedElement h = parse_element("hypot(1,1)");
  EXPECT_EQ(h.tower.depth(), 1u);
  EXPECT_EQ(h.value * h.value, FieldElement::rational(2, h.tower));
  EXPECT_EQ(sign(h.value), 1);
  EXPECT_EQ(parse_element("(3/5)^2 + (4/5)^2").value, rat(1));
  EXPECT_THROW(parse_element("1/0"), DivisionByZero);
}

TEST(Parse, Grammar) {
  EXPECT_EQ(parse_element("-2^3").value, rat(-8));
  EXPECT_EQ(parse_element("2^-2").value, rat(1, 4));
  EXPECT_EQ(parse_element("1 - 2 - 3").value, rat(-4));
  EXPECT_EQ(parse_element("12/3/2").value, rat(2));
  EXPECT_EQ(parse_element("hypot(3, 4) * 2").value, rat(10));
  ParsedElement n = parse_element("hypot(1, hypot(1,1))");
  EXPECT_EQ(n.value * n.value, FieldElement::rational(3, n.tower));
}

TEST(Parse, GeneratorNamesNeedTheTower) {
  Tower t = q_sqrt(2);
  EXPECT_EQ(parse_element("r1^2", t).value, FieldElement::rational(2, t));
  EXPECT_THROW(parse_element("r1"), ParseError);
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse_element("1 + * 2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_element("hypot(1"), ParseError);
  EXPECT_THROW(parse_element(""), ParseError);
  EXPECT_THROW(parse_element("2 3"), ParseError);
}

TEST(FieldIo, ElementRoundTrip) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Tower t = random_hilbert_tower(rng, trial % 4);
    FieldElement x = random_element(rng, t);
    Json j = element_to_json(x);
    EXPECT_EQ(element_from_json(Json::parse(j.dump()), t), x);
    Tower back = tower_from_json(Json::parse(tower_to_json(t).dump()));
    EXPECT_EQ(back.id(), t.id());
  }
}

TEST(FieldIo, RejectsBadTowers) {
  EXPECT_THROW(tower_from_json(Json::parse(R"([["4"]])")), DomainError);
  EXPECT_THROW(tower_from_json(Json::parse(R"([["-3"]])")), DomainError);
  EXPECT_THROW(tower_from_json(Json::parse(R"([["2"], ["1", "1"], ["x"]])")), Error);
}

TEST(Dot, MatchesSummedProductsAcrossStages) {
  Rng rng(61);
  Tower t = random_hilbert_tower(rng, 3);
  std::vector<Tower> stages{t.prefix(0), t.prefix(1), t.prefix(2), t};
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng.below(5);
    std::vector<FieldElement> a, b;
    FieldElement want;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(random_element(rng, stages[rng.below(4)]));
      b.push_back(random_element(rng, stages[rng.below(4)]));
      want = want + oracle::schoolbook(a.back().lift(t), b.back().lift(t));
    }
    FieldElement got = dot(a, b);
    EXPECT_EQ(got, want);
  }
  EXPECT_EQ(dot(std::vector<FieldElement>{}, std::vector<FieldElement>{}), FieldElement());
  EXPECT_THROW(dot(std::vector<FieldElement>{rat(1)}, std::vector<FieldElement>{}), DomainError);
  EXPECT_THROW(dot(std::vector{gen(q_sqrt(2))}, std::vector{gen(q_sqrt(3))}), TowerMismatch);
}
