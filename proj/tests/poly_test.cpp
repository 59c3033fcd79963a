#include <random>

#include "test_util.hpp"

using namespace pellfrac;
using pellfrac::testing::poly;
using pellfrac::testing::q;

namespace {

Poly x() { return Poly::x(); }

Poly random_poly(std::mt19937_64& rng, int degree, FieldTag field) {
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<QuadElem> c;
  for (int i = 0; i <= degree; ++i) {
    Rational a(coef(rng), 1 + (coef(rng) + 9) % 4);
    a.canonicalize();
    c.emplace_back(a, Rational(field.is_rational() ? 0 : coef(rng)), field);
  }
  if (c.back().is_zero()) c.back() = QuadElem(1);
  return Poly(std::move(c), field);
}

}  // namespace

TEST(PolyArith, SyntheticDivision) {
  // divmod(x^2 + u, x + w) = (x - w, u + w^2), checked at u = 3, w = -5/2
  auto [quot, rem] = divmod(poly({"1", "0", "3"}), poly({"1", "-5/2"}));
  EXPECT_EQ(quot, poly({"1", "5/2"}));
  EXPECT_EQ(rem, poly({"37/4"}));
}

TEST(PolyArith, DifferenceOfSquares) { EXPECT_EQ(poly({"1", "-1"}) * poly({"1", "1"}), poly({"1", "0", "-1"})); }

TEST(PolyArith, AddZero) {
  Poly f = poly({"2", "sqrt(3)", "-1"}, 3);
  EXPECT_EQ(f + Poly(), f);
  EXPECT_TRUE(Poly().is_zero());
  EXPECT_EQ(Poly().degree(), -1);
}

TEST(PolyArith, DivisionByZeroPolynomial) { EXPECT_ERRC(divmod(x(), Poly()), errc::division_by_zero); }

TEST(PolyArith, ExactDivisionRejectsRemainders) { EXPECT_ERRC(exact_div(poly({"1", "0", "1"}), x()), errc::structural_violation); }

TEST(PolyArith, DivmodReconstructsRandomInputs) {
  std::mt19937_64 rng(42);
  for (FieldTag field : {FieldTag(), FieldTag::of(17), FieldTag::of(-7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly f = random_poly(rng, 1 + trial % 6, field);
      Poly g = random_poly(rng, trial % 3, field);
      auto [quot, rem] = divmod(f, g);
      EXPECT_EQ(quot * g + rem, f);
      EXPECT_LT(rem.degree(), g.degree() == 0 ? 0 : g.degree());
    }
  }
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(gcd(poly({"1", "0", "-1"}), poly({"1", "-1"})), poly({"1", "-1"}));
  EXPECT_EQ(gcd(poly({"1", "0", "1"}), poly({"1", "0", "2"})), poly({"1"}));
  Poly f = poly({"3", "0", "1", "-1"});
  EXPECT_EQ(gcd(f, f), monic(f));
}

TEST(PolyGcd, DividesBothArguments) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Poly common = random_poly(rng, trial % 3, FieldTag::of(5));
    Poly f = random_poly(rng, 2, FieldTag::of(5)) * common;
    Poly g = random_poly(rng, 3, FieldTag::of(5)) * common;
    Poly d = gcd(f, g);
    EXPECT_TRUE((f % d).is_zero());
    EXPECT_TRUE((g % d).is_zero());
    EXPECT_GE(d.degree(), common.degree());
  }
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(is_squarefree(poly({"1", "0", "0", "0", "1"})));
  Poly repeated = poly({"1", "-1"}) * poly({"1", "-1"}) * poly({"1", "2"});
  EXPECT_FALSE(is_squarefree(repeated));
  EXPECT_TRUE(is_squarefree(poly({"1", "0", "4", "-32", "4"})));
}

TEST(PolyPartSqrt, Examples) {
  Poly shifted = poly({"1", "0", "3"}) * poly({"1", "0", "3"}) - poly({"4", "0"});
  EXPECT_EQ(poly_part_sqrt(shifted), poly({"1", "0", "3"}));
  EXPECT_EQ(poly_part_sqrt(poly({"1", "0", "0", "0", "1"})), poly({"1", "0", "0"}));
  EXPECT_EQ(poly_part_sqrt(poly({"4", "4", "1", "1", "0"})), poly({"2", "1", "0"}));
}

TEST(PolyPartSqrt, LeadMustBeSquare) {
  EXPECT_ERRC(poly_part_sqrt(poly({"2", "0", "0", "0", "1"})), errc::unsupported_quartic);
  EXPECT_EQ(poly_part_sqrt(poly({"2", "0", "0", "0", "1"}, 2)).lead(), q("sqrt(2)", 2));
  EXPECT_ERRC(poly_part_sqrt(poly({"1", "0", "1"})), errc::unsupported_quartic);
}

TEST(PolyPartSqrt, RemainderIsAtMostLinear) {
  std::mt19937_64 rng(3);
  for (FieldTag field : {FieldTag(), FieldTag::of(33)}) {
    for (int trial = 0; trial < 30; ++trial) {
      Poly f = random_poly(rng, 4, field);
      QuadElem lead = f.lead() * f.lead();
      std::vector<QuadElem> c = f.coeffs();
      c.back() = lead;
      Poly g(std::move(c), field);
      Poly A = poly_part_sqrt(g);
      EXPECT_LE((g - A * A).degree(), 1);
    }
  }
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(eval(poly({"1", "-2", "1", "-2", "6", "-4", "1"}), QuadElem(2)), QuadElem(17));
  EXPECT_EQ(eval(poly({"1", "-3", "1"}), QuadElem(2)), QuadElem(-1));
  Poly f = poly({"5", "sqrt(2)", "-7/3"}, 2);
  EXPECT_EQ(eval(f, QuadElem(0)), q("-7/3"));
}

TEST(PolyEval, QuadraticArgument) {
  // s^2 + 3s - 6 vanishes at (-3 + sqrt 33)/2.
  EXPECT_TRUE(eval(poly({"1", "3", "-6"}), q("-3/2+1/2*sqrt(33)", 33)).is_zero());
}

TEST(PolyText, Rendering) {
  EXPECT_EQ(poly({"1", "0", "4", "-32", "4"}).to_string(), "x^4 + 4*x^2 - 32*x + 4");
  EXPECT_EQ(Poly().to_string(), "0");
}
