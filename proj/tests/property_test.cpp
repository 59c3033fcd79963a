#include "pellfrac/families.hpp"
#include "pellfrac/properties.hpp"
#include "pellfrac/sampling.hpp"
#include "test_util.hpp"

using namespace pellfrac;
using pellfrac::testing::poly;
using pellfrac::testing::q;

namespace {

struct Instance {
  FamilySpec spec;
  CFExpansion e;
  int order;
};

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> out;
    for (const auto& fi : family_infos) {
      for (const auto& spec : sample_family_specs(fi.tag, 3, 2024)) {
        FamilyModel fm = family_quartic(spec);
        out.push_back({spec, expand_sqrt(fm.model.f()), *infinity_order(fm.model)});
      }
    }
    return out;
  }();
  return all;
}

std::string label(const Instance& in) { return std::string(name(in.spec.tag)) + " t=" + in.spec.t.to_string() + " s=" + in.spec.s.to_string(); }

std::string joined(const props::Violations& v) {
  std::string out;
  for (const auto& s : v) out += s + "; ";
  return out;
}

}  // namespace

TEST(Properties, SampleCoversEveryTag) { EXPECT_EQ(instances().size(), 3 * family_infos.size()); }

TEST(Properties, RecurrenceHoldsAtEveryStep) {
  for (const auto& in : instances()) EXPECT_TRUE(props::recurrence(in.e).empty()) << label(in) << ": " << joined(props::recurrence(in.e));
}

TEST(Properties, QuasiPeriodSymmetry) {
  for (const auto& in : instances()) {
    auto v = props::quasi_period_symmetry(in.e);
    EXPECT_TRUE(v.empty()) << label(in) << ": " << joined(v);
  }
}

TEST(Properties, RootSymmetry) {
  for (const auto& in : instances()) {
    auto v = props::root_symmetry(in.e);
    EXPECT_TRUE(v.empty()) << label(in) << ": " << joined(v);
  }
}

TEST(Properties, ScalingPatternForArbitraryMu) {
  const std::vector<QuadElem> mus{q("1/3"), q("-2"), q("5/7")};
  for (const auto& in : instances()) {
    for (const auto& mu : mus) {
      auto scaled = scaled_expand(in.e.f, mu);
      auto v = props::scaling_pattern(in.e, scaled, mu);
      EXPECT_TRUE(v.empty()) << label(in) << " mu=" << mu.to_string() << ": " << joined(v);
      EXPECT_EQ(scaled.period.has_value(), in.e.period.has_value());
    }
  }
}

TEST(Properties, ConvergentDeterminants) {
  for (const auto& in : instances()) EXPECT_TRUE(props::convergent_determinants(in.e).empty()) << label(in);
}

TEST(Properties, PeriodOrderRelation) {
  for (const auto& in : instances()) {
    ASSERT_TRUE(in.e.period) << label(in);
    EXPECT_TRUE(props::period_order_relation(*in.e.period, in.order).empty()) << label(in);
    EXPECT_LE(in.order, 18);
    EXPECT_EQ(in.order, info(in.spec.tag).torsion_order);
  }
}

TEST(Properties, GenericFirstQuotientRoot) {
  for (const auto& in : instances()) {
    const FamilyModel fm = family_quartic(in.spec);
    EXPECT_EQ(linear_root(in.e.steps[1].a), fm.model.w) << label(in);
  }
}

// The checkers must notice corrupted data, otherwise the checks above prove nothing.
TEST(Properties, CheckersDetectCorruption) {
  CFExpansion e = expand_sqrt(poly({"1", "0", "71/2", "-96", "1201/16"}));
  CFExpansion broken = e;
  broken.steps[3].a = broken.steps[3].a * QuadElem(2);
  EXPECT_FALSE(props::recurrence(broken).empty());
  EXPECT_FALSE(props::quasi_period_symmetry(broken).empty());
  EXPECT_FALSE(props::convergent_determinants(broken).empty() && props::recurrence(broken).empty());

  CFExpansion shifted = e;
  shifted.steps[2].a = shifted.steps[2].a + Poly::constant(QuadElem(1));
  EXPECT_FALSE(props::root_symmetry(shifted).empty());

  auto scaled = scaled_expand(e.f, q("3"));
  EXPECT_FALSE(props::scaling_pattern(e, scaled, q("1/3")).empty());

  EXPECT_FALSE(props::period_order_relation(18, 11).empty());
  EXPECT_FALSE(props::period_order_relation(20, 11).empty());
  EXPECT_TRUE(props::period_order_relation(10, 11).empty());
  EXPECT_TRUE(props::period_order_relation(18, 10).empty());
}

TEST(Properties, NonPeriodicInputsReportMissingStructure) {
  CFExpansion e = expand_sqrt(poly({"1", "0", "4", "-32", "4"}), 30);
  EXPECT_TRUE(props::recurrence(e).empty());
  EXPECT_TRUE(props::convergent_determinants(e).empty());
  EXPECT_FALSE(props::quasi_period_symmetry(e).empty());
  EXPECT_FALSE(props::root_symmetry(e).empty());
}
