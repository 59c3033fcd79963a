#include "pellfrac/modcurve.hpp"
#include "test_util.hpp"

using namespace pellfrac;
using pellfrac::testing::q;

namespace {

bool contains(const std::vector<ModCurvePoint>& pts, const QuadElem& t, const QuadElem& s) {
  for (const auto& p : pts)
    if (p.t == t && p.s == s) return true;
  return false;
}

}  // namespace

TEST(ModCurveIds, Parsing) {
  EXPECT_EQ(parse_curve_id("13"), ModCurveId::X1_13);
  EXPECT_EQ(parse_curve_id("X1(18)"), ModCurveId::X1_18);
  EXPECT_EQ(parse_curve_id("2,10"), ModCurveId::X1_2_10);
  EXPECT_EQ(parse_curve_id("2_12"), ModCurveId::X1_2_12);
  EXPECT_EQ(parse_curve_id("X1(2, 10)"), ModCurveId::X1_2_10);
  EXPECT_ERRC(parse_curve_id("17"), errc::unsupported_curve);
  for (auto id : all_mod_curves) EXPECT_EQ(parse_curve_id(name(id)), id);
}

TEST(OnCurve, Examples) {
  EXPECT_TRUE(on_curve(ModCurveId::X1_13, q("2"), q("sqrt(17)", 17)));
  EXPECT_TRUE(on_curve(ModCurveId::X1_14, q("2"), q("-3/2+1/2*sqrt(33)", 33)));
  EXPECT_TRUE(on_curve(ModCurveId::X1_11, q("0"), q("0")));
  EXPECT_FALSE(on_curve(ModCurveId::X1_13, q("2"), q("4")));
  EXPECT_FALSE(on_curve(ModCurveId::X1_14, q("2"), q("1")));
}

TEST(IsCusp, Examples) {
  EXPECT_TRUE(is_cusp(ModCurveId::X1_13, q("1")));
  EXPECT_FALSE(is_cusp(ModCurveId::X1_13, q("2")));
  EXPECT_TRUE(is_cusp(ModCurveId::X1_14, q("0")));
  EXPECT_TRUE(is_cusp(ModCurveId::X1_16, q("-1+sqrt(2)", 2)));
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(admissible(ModCurveId::X1_14, q("2")));
  EXPECT_FALSE(admissible(ModCurveId::X1_13, q("1")));
  EXPECT_FALSE(admissible(ModCurveId::X1_16, q("1")));
  EXPECT_FALSE(admissible(ModCurveId::X1_16, q("sqrt(-1)", -1)));
  EXPECT_EQ(admissibility_condition(ModCurveId::X1_14), "t(t-1)(t+1)(t^3-9t^2-t+1)(t^3-2t^2-t+1) != 0");
}

TEST(SolvePoints, ThirteenOverQSqrt17) {
  auto pts = solve_points(ModCurveId::X1_13, FieldTag::of(17), 2);
  EXPECT_TRUE(contains(pts, q("2"), q("sqrt(17)", 17)));
  EXPECT_TRUE(contains(pts, q("2"), q("-sqrt(17)", 17)));
}

TEST(SolvePoints, FourteenOverQHasOnlyCuspsOrExcludedPoints) {
  auto pts = solve_points(ModCurveId::X1_14, FieldTag(), 3);
  EXPECT_FALSE(pts.empty());
  for (const auto& p : pts) EXPECT_TRUE(p.cusp || !p.admissible) << p.t.to_string() << ", " << p.s.to_string();
}

TEST(SolvePoints, EighteenAtHeightOne) {
  auto pts = solve_points(ModCurveId::X1_18, FieldTag(), 1);
  ASSERT_TRUE(contains(pts, q("0"), q("1")));
  for (const auto& p : pts)
    if (p.t.is_zero()) {
      EXPECT_TRUE(p.cusp);
    }
}

TEST(SolvePoints, FourteenOverQSqrtMinus7) {
  auto pts = solve_points(ModCurveId::X1_14, FieldTag::of(-7), 6);
  int good = 0;
  for (const auto& p : pts) good += p.admissible && !p.cusp;
  EXPECT_EQ(good, 4);
}

TEST(SolvePoints, EveryPointIsOnItsCurve) {
  for (auto id : all_mod_curves) {
    for (std::int64_t d : {1, 5, -7}) {
      for (const auto& p : solve_points(id, FieldTag::of(d), 3)) {
        EXPECT_TRUE(p.on_curve);
        EXPECT_TRUE(on_curve(id, p.t, p.s));
        EXPECT_EQ(p.cusp, is_cusp(id, p.t));
        EXPECT_EQ(p.admissible, admissible(id, p.t, p.s));
      }
    }
  }
}

TEST(SolvePoints, HyperellipticCurvesReturnBothSigns) {
  for (auto id : {ModCurveId::X1_13, ModCurveId::X1_16, ModCurveId::X1_18}) {
    auto pts = solve_points(id, FieldTag::of(2), 2);
    for (const auto& p : pts) {
      auto root = qf_sqrt(p.s * p.s);
      ASSERT_TRUE(root);
      EXPECT_TRUE(p.s == *root || p.s == -*root);
      if (!p.s.is_zero()) {
        EXPECT_TRUE(contains(pts, p.t, -p.s));
      }
    }
  }
}

TEST(SolvePoints, NoRationalPointsOfExcludedOrders) {
  // Torsion of order 11, 13, 14, 15, 16, 18 does not occur over Q.
  for (auto id : {ModCurveId::X1_11, ModCurveId::X1_13, ModCurveId::X1_14, ModCurveId::X1_15, ModCurveId::X1_16, ModCurveId::X1_18})
    for (const auto& p : solve_points(id, FieldTag(), 6))
      EXPECT_TRUE(p.cusp || !p.admissible) << name(id) << " t=" << p.t.to_string();
}

TEST(SolvePoints, DeterministicAcrossThreadCounts) {
  auto one = solve_points(ModCurveId::X1_15, FieldTag::of(-3), 3, 1);
  auto four = solve_points(ModCurveId::X1_15, FieldTag::of(-3), 3, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].t, four[i].t);
    EXPECT_EQ(one[i].s, four[i].s);
  }
}

TEST(SRoots, SortedAndOnCurve) {
  auto roots = s_roots(ModCurveId::X1_14, q("2"), FieldTag::of(33));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE(LexLess{}(roots[0], roots[1]));
  for (const auto& s : roots) EXPECT_TRUE(on_curve(ModCurveId::X1_14, q("2"), s));
  EXPECT_TRUE(s_roots(ModCurveId::X1_14, q("2")).empty());
}
