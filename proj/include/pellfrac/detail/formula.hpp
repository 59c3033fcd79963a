#pragma once

// Evaluators for the generated family tables: each formula is
// constant * prod_i F_i(s, t)^{e_i} with bivariate polynomial factors F_i.

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pellfrac/detail/family_tables.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/qfield.hpp"
#include "pellfrac/rational.hpp"

namespace pellfrac::detail {

struct BiTerm {
  int s_pow;
  int t_pow;
  Rational coef;
};

struct BiFactor {
  std::vector<BiTerm> terms;
  int exponent;
  int max_s = 0;
  int max_t = 0;
};

class CompiledFormula {
 public:
  CompiledFormula() = default;

  explicit CompiledFormula(const tables::Formula& src) : name_(src.name), constant_(parse_rational(src.constant)) {
    for (const auto& f : src.factors) {
      BiFactor bf{{}, f.exponent};
      for (const auto& term : f.terms) {
        bf.terms.push_back({term.s_pow, term.t_pow, parse_rational(term.coef)});
        bf.max_s = std::max(bf.max_s, term.s_pow);
        bf.max_t = std::max(bf.max_t, term.t_pow);
      }
      factors_.push_back(std::move(bf));
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<BiFactor>& factors() const { return factors_; }

  QuadElem operator()(const QuadElem& t, const QuadElem& s = QuadElem()) const {
    const FieldTag field = join(t.field(), s.field());
    QuadElem acc(constant_, field);
    for (const auto& f : factors_) {
      QuadElem v = eval_factor(f, t, s);
      if (f.exponent < 0) {
        if (v.is_zero()) throw error(errc::inadmissible, name_ + ": denominator factor vanishes at t = " + t.to_string() + ", s = " + s.to_string());
        v = v.inverse();
      }
      acc *= pow(v, static_cast<unsigned>(f.exponent < 0 ? -f.exponent : f.exponent));
    }
    return acc;
  }

  /// Copy with coefficient `term` of factor `factor` shifted by `delta`.
  CompiledFormula perturbed(std::size_t factor, std::size_t term, const Rational& delta) const {
    CompiledFormula copy = *this;
    auto& terms = copy.factors_.at(factor).terms;
    terms.at(term).coef += delta;
    copy.name_ += " (perturbed)";
    return copy;
  }

 private:
  static QuadElem eval_factor(const BiFactor& f, const QuadElem& t, const QuadElem& s) {
    std::vector<QuadElem> tp{QuadElem(1)}, sp{QuadElem(1)};
    for (int i = 1; i <= f.max_t; ++i) tp.push_back(tp.back() * t);
    for (int i = 1; i <= f.max_s; ++i) sp.push_back(sp.back() * s);
    QuadElem sum(0, join(t.field(), s.field()));
    for (const auto& term : f.terms)
      sum += QuadElem(term.coef) * sp[static_cast<std::size_t>(term.s_pow)] * tp[static_cast<std::size_t>(term.t_pow)];
    return sum;
  }

  std::string name_;
  Rational constant_;
  std::vector<BiFactor> factors_;
};

inline const std::map<std::string, CompiledFormula, std::less<>>& compiled_formulas() {
  static const auto table = [] {
    std::map<std::string, CompiledFormula, std::less<>> m;
    for (const auto* f : tables::all_formulas) m.emplace(std::string(f->name), CompiledFormula(*f));
    return m;
  }();
  return table;
}

inline const CompiledFormula& formula(std::string_view name) {
  const auto& table = compiled_formulas();
  auto it = table.find(name);
  if (it == table.end()) throw error(errc::structural_violation, "no formula named " + std::string(name));
  return it->second;
}

}  // namespace pellfrac::detail
