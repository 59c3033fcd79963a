#include "pellfrac/json_io.hpp"
#include "test_util.hpp"

using namespace pellfrac;
using pellfrac::testing::poly;
using pellfrac::testing::q;

TEST(Json, QuadElemEncoding) {
  json j = to_json(q("-3/2+1/2*sqrt(33)", 33));
  EXPECT_EQ(j.dump(), R"({"a":"-3/2","b":"1/2","d":33})");
  EXPECT_EQ(to_json(q("7")).dump(), R"({"a":"7","b":"0","d":1})");
}

TEST(Json, QuadElemRoundTrip) {
  for (const auto& z : enumerate_elements(FieldTag::of(-7), 3)) EXPECT_EQ(quad_from_json(to_json(z)), z);
  EXPECT_THROW(quad_from_json(json{{"a", "1"}}), std::exception);
}

TEST(Json, PolyIsLowestDegreeFirst) {
  Poly f = poly({"1", "0", "4", "-32", "4"});
  json j = to_json(f);
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[0]["a"], "4");
  EXPECT_EQ(j[1]["a"], "-32");
  EXPECT_EQ(j[4]["a"], "1");
  EXPECT_EQ(poly_from_json(j), f);
}

TEST(Json, ExpansionFields) {
  json j = to_json(expand_sqrt(poly({"1", "0", "0", "0", "4"})), true);
  EXPECT_EQ(j["period"], 2);
  EXPECT_EQ(j["r"], 1);
  EXPECT_EQ(quad_from_json(j["k"]), QuadElem(4));
  EXPECT_EQ(j["f_text"], "x^4 + 4");
  ASSERT_TRUE(j.contains("steps"));
  EXPECT_EQ(j["steps"][1]["h"], 1);
  EXPECT_EQ(poly_from_json(j["steps"][1]["Q"]), poly({"4"}));
  EXPECT_FALSE(to_json(expand_sqrt(poly({"1", "0", "0", "0", "4"})), false).contains("steps"));
}

TEST(Json, MissingValuesAreNull) {
  json j = to_json(expand_sqrt(poly({"1", "0", "4", "-32", "4"}), 10));
  EXPECT_TRUE(j["period"].is_null());
  EXPECT_TRUE(j["r"].is_null());
  EXPECT_TRUE(j["k"].is_null());
}

TEST(Json, CurvesAndPoints) {
  ShortWeierstrass E{q("-1"), q("0")};
  EXPECT_EQ(to_json(E)["A"]["a"], "-1");
  EXPECT_EQ(to_json(ECPoint::identity()).dump(), R"({"infinity":true})");
  json p = to_json(ECPoint::affine(q("1"), q("0")));
  EXPECT_EQ(p["infinity"], false);
  EXPECT_EQ(quad_from_json(p["x"]), QuadElem(1));
  QuarticModel M{q("2"), q("2"), q("0")};
  json m = to_json(M);
  EXPECT_EQ(m["f_text"], "x^4 + 4*x^2 - 8*x + 4");
  EXPECT_EQ(quad_from_json(m["v"]), QuadElem(2));
}

TEST(Json, ModCurvePoint) {
  json j = to_json(make_point(ModCurveId::X1_13, q("2"), q("sqrt(17)", 17)));
  EXPECT_EQ(j["curve"], "X1(13)");
  EXPECT_EQ(j["on_curve"], true);
  EXPECT_EQ(j["cusp"], false);
  EXPECT_EQ(j["admissible"], true);
  EXPECT_EQ(j["s"]["d"], 17);
}

TEST(Json, Certificate) {
  auto cert = odd_period_certificate(13, make_point(ModCurveId::X1_14, q("2"), q("-3/2+1/2*sqrt(33)", 33)));
  json j = to_json(cert);
  EXPECT_EQ(j["n"], 13);
  EXPECT_EQ(j["period"], 26);
  EXPECT_EQ(j["k_square"], false);
  EXPECT_TRUE(j["mu"].is_null());
  EXPECT_EQ(quad_from_json(j["alpha"]), q("-10916784+1900368*sqrt(33)", 33));
}
