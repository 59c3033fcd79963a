// Every transcribed formula, evaluated at one pinned point, must reproduce the
// value frozen when the tables were generated.

#include <set>
#include <string>
#include <utility>

#include "pellfrac/detail/formula.hpp"
#include "test_util.hpp"

using namespace pellfrac;

namespace {

const std::pair<const char*, const char*> frozen[] = {
#include "family_tables_checksum.inc"
};

}  // namespace

TEST(FamilyTables, PinnedValues) {
  const QuadElem t(parse_rational("7/3"));
  const QuadElem s(parse_rational("5/2"));
  for (const auto& [name, value] : frozen) {
    SCOPED_TRACE(name);
    EXPECT_EQ(detail::formula(name)(t, s), QuadElem(parse_rational(value)));
  }
}

TEST(FamilyTables, EveryFormulaIsPinned) {
  std::set<std::string> pinned;
  for (const auto& entry : frozen) pinned.insert(entry.first);
  for (const auto& [name, f] : detail::compiled_formulas()) EXPECT_TRUE(pinned.count(name)) << name << " has no pinned value";
  EXPECT_EQ(pinned.size(), detail::compiled_formulas().size());
}

TEST(FamilyTables, PerturbationChangesTheValue) {
  const QuadElem t(parse_rational("7/3"));
  const QuadElem s(parse_rational("5/2"));
  for (const char* name : {"alpha13", "alpha15", "alpha17"}) {
    const auto& f = detail::formula(name);
    auto g = f.perturbed(f.factors().size() - 1, 0, Rational(1));
    EXPECT_NE(f(t, s), g(t, s)) << name;
  }
}

TEST(FamilyTables, VanishingDenominatorIsInadmissible) {
  // tate_b_8 = (t-1)(2t-1), tate_c_8 divides by t
  EXPECT_ERRC(detail::formula("tate_c_8")(QuadElem(0)), errc::inadmissible);
}

TEST(FamilyTables, UnknownNameIsAnError) { EXPECT_ERRC(detail::formula("tate_b_99"), errc::structural_violation); }
