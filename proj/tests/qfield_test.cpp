#include <set>

#include "test_util.hpp"

using namespace pellfrac;
using pellfrac::testing::q;

TEST(CanonicalField, SquareFreeInputIsKept) {
  auto c = canonical_field(17);
  EXPECT_EQ(c.field.d(), 17);
  EXPECT_EQ(c.square_factor, 1);
}

TEST(CanonicalField, ExtractsSquareFactor) {
  auto c = canonical_field(12);
  EXPECT_EQ(c.field.d(), 3);
  EXPECT_EQ(c.square_factor, 4);
  auto i = canonical_field(-4);
  EXPECT_EQ(i.field.d(), -1);
  EXPECT_EQ(i.square_factor, 4);
  EXPECT_TRUE(canonical_field(9).field.is_rational());
}

TEST(CanonicalField, ZeroIsRejected) { EXPECT_ERRC(canonical_field(0), errc::invalid_field); }

TEST(QuadArith, ConjugateProductIsNorm) { EXPECT_EQ(q("1+sqrt(2)", 2) * q("1-sqrt(2)", 2), QuadElem(-1)); }

TEST(QuadArith, TraceOfConjugates) { EXPECT_EQ(q("1/2+sqrt(5)", 5) + q("1/2-sqrt(5)", 5), QuadElem(1)); }

TEST(QuadArith, InverseMultipliesByConjugate) { EXPECT_EQ(QuadElem(1) / q("2+sqrt(3)", 3), q("2-sqrt(3)", 3)); }

TEST(QuadArith, DivisionByZero) { EXPECT_ERRC(q("1+sqrt(3)", 3) / QuadElem(0), errc::division_by_zero); }

TEST(QuadArith, MixedFieldsAreRejected) { EXPECT_ERRC(q("sqrt(2)", 2) + q("sqrt(3)", 3), errc::field_mismatch); }

TEST(QuadArith, RationalsPromoteIntoAnyField) {
  QuadElem z = q("sqrt(2)", 2) * QuadElem(3);
  EXPECT_EQ(z.field().d(), 2);
  EXPECT_EQ(z, q("3*sqrt(2)", 2));
}

TEST(ConjNorm, GaussianInteger) {
  auto cn = conj_norm(q("3+4*sqrt(-1)", -1));
  EXPECT_EQ(cn.conj, q("3-4*sqrt(-1)", -1));
  EXPECT_EQ(cn.norm, 25);
}

TEST(ConjNorm, RationalElement) {
  auto cn = conj_norm(q("7", 5));
  EXPECT_EQ(cn.conj, QuadElem(7));
  EXPECT_EQ(cn.norm, 49);
}

TEST(ConjNorm, Unit) { EXPECT_EQ(conj_norm(q("2+sqrt(3)", 3)).norm, 1); }

TEST(RatSqrt, Examples) {
  EXPECT_EQ(rat_sqrt(parse_rational("9/4")), parse_rational("3/2"));
  EXPECT_FALSE(rat_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rat_sqrt(parse_rational("24696/1764")).has_value());
  EXPECT_FALSE(rat_sqrt(Rational(-4)).has_value());
}

TEST(QfSqrt, Examples) {
  EXPECT_EQ(qf_sqrt(q("7+4*sqrt(3)", 3)), q("2+sqrt(3)", 3));
  EXPECT_FALSE(qf_sqrt(q("3", 5)).has_value());
  EXPECT_EQ(qf_sqrt(q("8", 2)), q("2*sqrt(2)", 2));
}

TEST(QfSqrt, CanonicalSignHasPositiveFirstCoordinate) {
  EXPECT_EQ(qf_sqrt(q("-1", -1)), q("sqrt(-1)", -1));
  EXPECT_EQ(qf_sqrt(q("3-2*sqrt(2)", 2)), q("1-sqrt(2)", 2));
}

// Independent oracle: square everything of height <= 2H and collect the
// squares that themselves have height <= H.
TEST(QfSqrt, AgreesWithSquaringOracle) {
  const unsigned H = 4;
  for (std::int64_t d : {1, 2, -1, 5, -3}) {
    FieldTag field = FieldTag::of(d);
    std::set<std::pair<std::string, std::string>> squares;
    for (const auto& r : enumerate_elements(field, 2 * H)) {
      QuadElem s = r * r;
      if (height(s) <= H) squares.insert({s.a().get_str(), s.b().get_str()});
    }
    for (const auto& z : enumerate_elements(field, H)) {
      auto r = qf_sqrt(z);
      const bool oracle = squares.count({z.a().get_str(), z.b().get_str()}) > 0;
      EXPECT_EQ(r.has_value(), oracle) << "d=" << d << " z=" << z.to_string();
      if (r) {
        EXPECT_EQ(*r * *r, z);
      }
    }
  }
}

TEST(QfSqrt, SquaresAlwaysHaveRoots) {
  for (const auto& z : enumerate_elements(FieldTag::of(7), 3)) {
    auto r = qf_sqrt(z * z);
    ASSERT_TRUE(r.has_value()) << z.to_string();
    EXPECT_EQ(*r * *r, z * z);
  }
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_elements(FieldTag(), 1).size(), 3u);
  EXPECT_EQ(enumerate_elements(FieldTag::of(2), 1).size(), 9u);
  auto e = enumerate_elements(FieldTag(), 2);
  ASSERT_EQ(e.size(), 7u);
  std::set<std::string> got;
  for (const auto& z : e) got.insert(z.to_string());
  EXPECT_EQ(got, (std::set<std::string>{"0", "1", "-1", "2", "-2", "1/2", "-1/2"}));
}

TEST(Enumerate, HeightOrderedWithoutRepeats) {
  auto e = enumerate_elements(FieldTag::of(-7), 4);
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_TRUE(seen.insert({e[i].a().get_str(), e[i].b().get_str()}).second);
    if (i) {
      EXPECT_LE(height(e[i - 1]), height(e[i]));
    }
  }
}

TEST(QuadProperties, NormAndConjugationAreMultiplicative) {
  auto elems = enumerate_elements(FieldTag::of(3), 2);
  for (const auto& z : elems)
    for (const auto& w : elems) {
      EXPECT_EQ((z * w).norm(), z.norm() * w.norm());
      EXPECT_EQ((z * w).conj(), z.conj() * w.conj());
      if (!w.is_zero()) {
        EXPECT_EQ((z / w) * w, z);
      }
    }
}

TEST(ParseQuad, AcceptedForms) {
  EXPECT_EQ(q("-3/2+1/2*sqrt(33)", 33), QuadElem(parse_rational("-3/2"), parse_rational("1/2"), FieldTag::of(33)));
  EXPECT_EQ(q(" 1 / 2 ", 1), QuadElem(parse_rational("1/2")));
  EXPECT_EQ(q("-sqrt(2)", 2), QuadElem(0, -1, FieldTag::of(2)));
  EXPECT_EQ(q("sqrt(12)", 3), q("2*sqrt(3)", 3));
}

TEST(ParseQuad, Rejections) {
  EXPECT_ERRC(q("", 1), errc::parse_error);
  EXPECT_ERRC(q("abc", 1), errc::parse_error);
  EXPECT_THROW(q("1/0", 1), error);
  EXPECT_THROW(q("sqrt(5)", 2), error);
}
