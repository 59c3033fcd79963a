#pragma once

// Parametrized families of periodic quartics: Tate (b, c) parametrizations,
// the composed and printed (u, v, w) models, the closed-form constants k10 and
// k12, and odd-period square certificates.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pellfrac/cfrac.hpp"
#include "pellfrac/detail/formula.hpp"
#include "pellfrac/ecurve.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/modcurve.hpp"
#include "pellfrac/qfield.hpp"

namespace pellfrac {

enum class FamilyTag { ord10, ord12, per10_i, per10_X11, per12_X13, per14_i, per14_X15, per26_X14, per30_X16, per34_X18 };

struct FamilyInfo {
  FamilyTag tag;
  std::string_view name;
  int torsion_order;  // order of the Tate point, i.e. of infinity^+ - infinity^-
  std::optional<ModCurveId> curve;
};

inline constexpr std::array<FamilyInfo, 10> family_infos = {{
    {FamilyTag::ord10, "ord10", 10, std::nullopt},
    {FamilyTag::ord12, "ord12", 12, std::nullopt},
    {FamilyTag::per10_i, "per10_i", 6, std::nullopt},
    {FamilyTag::per10_X11, "per10_X11", 11, ModCurveId::X1_11},
    {FamilyTag::per12_X13, "per12_X13", 13, ModCurveId::X1_13},
    {FamilyTag::per14_i, "per14_i", 8, std::nullopt},
    {FamilyTag::per14_X15, "per14_X15", 15, ModCurveId::X1_15},
    {FamilyTag::per26_X14, "per26_X14", 14, ModCurveId::X1_14},
    {FamilyTag::per30_X16, "per30_X16", 16, ModCurveId::X1_16},
    {FamilyTag::per34_X18, "per34_X18", 18, ModCurveId::X1_18},
}};

inline const FamilyInfo& info(FamilyTag tag) { return family_infos[static_cast<std::size_t>(tag)]; }
inline std::string_view name(FamilyTag tag) { return info(tag).name; }

inline FamilyTag parse_family_tag(std::string_view text) {
  for (const auto& fi : family_infos)
    if (fi.name == text) return fi.tag;
  throw error(errc::parse_error, "unknown family tag '" + std::string(text) + "'");
}

struct FamilySpec {
  FamilyTag tag = FamilyTag::ord10;
  QuadElem t;
  QuadElem s;  // ignored for tags without a modular curve

  FieldTag field() const { return join(t.field(), s.field()); }
};

namespace detail {

struct OrderCondition {
  std::vector<Poly> factors;
  std::string text;
};

/// Nonvanishing conditions for the one-parameter Tate families.
inline const OrderCondition* rational_order_condition(int order) {
  static const std::array<OrderCondition, 4> conds = [] {
    const Poly t = int_poly({0, 1});
    const Poly tm1 = int_poly({-1, 1});
    const Poly tp1 = int_poly({1, 1});
    const Poly two_tm1 = int_poly({-1, 2});
    return std::array<OrderCondition, 4>{{
        {{t, tp1, int_poly({-1, 6, 3})}, "t(t+1)(3t^2+6t-1) != 0"},
        {{t, tm1, two_tm1}, "t(t-1)(2t-1) != 0"},
        {{t, tm1, two_tm1, int_poly({1, -3, 1})}, "t(t-1)(2t-1)(t^2-3t+1) != 0"},
        {{t, tm1, two_tm1, int_poly({1, -2, 2}), int_poly({1, -3, 3})}, "t(t-1)(2t-1)(2t^2-2t+1)(3t^2-3t+1) != 0"},
    }};
  }();
  switch (order) {
    case 6: return &conds[0];
    case 8: return &conds[1];
    case 10: return &conds[2];
    case 12: return &conds[3];
    default: return nullptr;
  }
}

inline std::optional<ModCurveId> curve_for_order(int order) {
  switch (order) {
    case 11: return ModCurveId::X1_11;
    case 13: return ModCurveId::X1_13;
    case 14: return ModCurveId::X1_14;
    case 15: return ModCurveId::X1_15;
    case 16: return ModCurveId::X1_16;
    case 18: return ModCurveId::X1_18;
    default: return std::nullopt;
  }
}

inline void require_admissible(int order, const QuadElem& t, const QuadElem& s) {
  if (const auto* cond = rational_order_condition(order)) {
    for (const auto& f : cond->factors)
      if (eval(f, t).is_zero()) throw error(errc::inadmissible, "t = " + t.to_string() + " violates " + cond->text);
    return;
  }
  auto curve = curve_for_order(order);
  if (!curve) throw error(errc::unsupported_curve, "no Tate parametrization for order " + std::to_string(order));
  if (!on_curve(*curve, t, s))
    throw error(errc::not_on_curve, "(" + t.to_string() + ", " + s.to_string() + ") is not on " + std::string(name(*curve)));
  if (!admissible(*curve, t, s)) throw error(errc::inadmissible, "t = " + t.to_string() + " violates " + admissibility_condition(*curve));
}

}  // namespace detail

/// Admissibility condition text for a family tag.
inline std::string admissibility_condition(FamilyTag tag) {
  const auto& fi = info(tag);
  if (fi.curve) return admissibility_condition(*fi.curve);
  return detail::rational_order_condition(fi.torsion_order)->text;
}

/// (b, c) of the Tate curve whose point (0,0) has the given order.
inline TateCurve tate_params(int order, const QuadElem& t, const QuadElem& s = QuadElem()) {
  detail::require_admissible(order, t, s);
  const std::string o = std::to_string(order);
  TateCurve T{detail::formula("tate_b_" + o)(t, s), detail::formula("tate_c_" + o)(t, s)};
  if (T.discriminant().is_zero())
    throw error(errc::singular_curve, "order-" + o + " Tate curve is singular at t = " + t.to_string() + (detail::curve_for_order(order) ? ", s = " + s.to_string() : ""));
  return T;
}

/// The printed quartic coefficients for a tag, evaluated verbatim.
inline QuarticModel printed_model(const FamilySpec& spec) {
  const std::string n(name(spec.tag));
  auto at = [&](const char* which) { return detail::formula(std::string("printed_") + which + "_" + n)(spec.t, spec.s); };
  return {at("u"), at("v"), at("w")};
}

/// How the printed model relates to the composed one.
enum class ModelRelation { identical, w_negated, mirrored, mismatch };

inline std::string_view to_string(ModelRelation r) {
  switch (r) {
    case ModelRelation::identical: return "identical";
    case ModelRelation::w_negated: return "w_negated";
    case ModelRelation::mirrored: return "mirrored";
    case ModelRelation::mismatch: return "mismatch";
  }
  return "?";
}

inline ModelRelation relation(const QuarticModel& composed, const QuarticModel& printed) {
  if (composed == printed) return ModelRelation::identical;
  if (composed.u == printed.u && composed.v == printed.v && composed.w == -printed.w) return ModelRelation::w_negated;
  if (composed.u == printed.u && composed.v == -printed.v && composed.w == -printed.w) return ModelRelation::mirrored;
  return ModelRelation::mismatch;
}

struct FamilyModel {
  FamilySpec spec;
  TateCurve tate;
  QuarticModel model;  // composed from the Tate curve; authoritative
  QuarticModel printed;
  ModelRelation printed_relation = ModelRelation::mismatch;
  std::optional<int> printed_order;  // infinity order of the printed model, if it is a valid model
  int torsion_order = 0;
};

/// Composes tate_params, tate_to_short and quartic_from_point(E, -P), and
/// evaluates the printed model alongside it.
inline FamilyModel family_quartic(const FamilySpec& spec, int order_bound = default_order_bound) {
  const auto& fi = info(spec.tag);
  FamilyModel out;
  out.spec = spec;
  out.torsion_order = fi.torsion_order;
  out.tate = tate_params(fi.torsion_order, spec.t, spec.s);
  TateImage img = tate_to_short(out.tate);
  out.model = quartic_from_point(img.E, neg(img.P));
  out.printed = printed_model(spec);
  out.printed_relation = relation(out.model, out.printed);
  try {
    out.printed_order = infinity_order(out.printed, order_bound);
  } catch (const error&) {
    out.printed_order = std::nullopt;
  }
  return out;
}

/// Closed-form k for the order-10 and order-12 families.
inline QuadElem family_k(FamilyTag tag, const QuadElem& t) {
  if (tag != FamilyTag::ord10 && tag != FamilyTag::ord12) throw error(errc::degenerate_parameters, "family_k is defined for ord10 and ord12 only");
  const int order = info(tag).torsion_order;
  detail::require_admissible(order, t, QuadElem());
  return detail::formula(tag == FamilyTag::ord10 ? "k10" : "k12")(t);
}

inline FamilyTag tag_for_odd_period(int n) {
  switch (n) {
    case 13: return FamilyTag::per26_X14;
    case 15: return FamilyTag::per30_X16;
    case 17: return FamilyTag::per34_X18;
    default: throw error(errc::degenerate_parameters, "odd-period certificates exist for n in {13, 15, 17}, got " + std::to_string(n));
  }
}

/// alpha_n(t, s); `table` overrides the built-in transcription.
inline QuadElem alpha_poly(int n, const QuadElem& t, const QuadElem& s, const detail::CompiledFormula* table = nullptr) {
  const FamilyTag tag = tag_for_odd_period(n);
  detail::require_admissible(info(tag).torsion_order, t, s);
  const auto& f = table ? *table : detail::formula("alpha" + std::to_string(n));
  return f(t, s);
}

/// A deliberately corrupted copy of the alpha_n table (first coefficient of the
/// last factor shifted by one), used to exercise the cross-oracle.
inline detail::CompiledFormula corrupted_alpha(int n) {
  (void)tag_for_odd_period(n);
  const auto& f = detail::formula("alpha" + std::to_string(n));
  return f.perturbed(f.factors().size() - 1, 0, Rational(1));
}

struct OddPeriodCertificate {
  int n = 0;
  ModCurvePoint point;
  QuarticModel model;
  int period = 0;  // period of sqrt(f) itself
  int quasi_period = 0;
  QuadElem k;
  QuadElem alpha;
  bool k_square = false;
  bool alpha_square = false;
  std::optional<QuadElem> mu;
  std::optional<int> scaled_period;
};

struct CertificateOptions {
  int max_steps = default_max_steps;
  const detail::CompiledFormula* alpha_table = nullptr;
};

/// Decides whether some mu*sqrt(f) has odd period n for the family quartic at
/// `point`, by two oracles: the square test on the CF constant k, and the
/// square test on alpha_n. The oracles must put k and alpha in the same
/// square class; otherwise a transcription fault is raised.
inline OddPeriodCertificate odd_period_certificate(int n, const ModCurvePoint& point, const CertificateOptions& opts = {}) {
  const FamilyTag tag = tag_for_odd_period(n);
  const auto expected_curve = *info(tag).curve;
  if (point.id != expected_curve)
    throw error(errc::unsupported_curve, "period " + std::to_string(n) + " needs a point on " + std::string(name(expected_curve)));
  if (is_cusp(point.id, point.t)) throw error(errc::inadmissible, "t = " + point.t.to_string() + " is a cusp of " + std::string(name(point.id)));

  OddPeriodCertificate cert;
  cert.n = n;
  cert.point = make_point(point.id, point.t, point.s);
  cert.alpha = alpha_poly(n, point.t, point.s, opts.alpha_table);
  FamilyModel fm = family_quartic({tag, point.t, point.s});
  cert.model = fm.model;
  CFExpansion e = expand_sqrt(cert.model.f(), opts.max_steps);
  auto qp = quasi_period(e);
  if (!qp || !e.period) throw error(errc::structural_violation, "family quartic did not expand periodically within " + std::to_string(opts.max_steps) + " steps");
  if (qp->r != n) throw error(errc::structural_violation, "quasi-period " + std::to_string(qp->r) + " differs from " + std::to_string(n));
  cert.period = *e.period;
  cert.quasi_period = qp->r;
  cert.k = qp->k;
  auto root_k = qf_sqrt(cert.k);
  cert.k_square = root_k.has_value();
  cert.alpha_square = is_square(cert.alpha);
  if (cert.alpha.is_zero() || !is_square(cert.k / cert.alpha))
    throw error(errc::transcription_fault, "k = " + cert.k.to_string() + " and alpha" + std::to_string(n) + " = " + cert.alpha.to_string() +
                                               " lie in different square classes at t = " + point.t.to_string() + ", s = " + point.s.to_string());
  if (root_k) {
    cert.mu = root_k->inverse();
    CFExpansion scaled = scaled_expand(cert.model.f(), *cert.mu, opts.max_steps);
    if (scaled.period != n)
      throw error(errc::structural_violation, "scaled expansion with mu = " + cert.mu->to_string() + " does not have period " + std::to_string(n));
    cert.scaled_period = scaled.period;
  }
  return cert;
}

/// The s with (t, s) on the curve given by the + branch (-p + sqrt(disc))/2,
/// sqrt in canonical sign.
inline std::optional<QuadElem> principal_s(ModCurveId id, const QuadElem& t, FieldTag field = {}) {
  field = join(field, t.field());
  const auto& c = detail::curve_data(id);
  QuadElem p = eval(c.p, t).in(field);
  auto r = qf_sqrt((p * p + QuadElem(4) * eval(c.h, t)).in(field));
  if (!r) return std::nullopt;
  return (-p + *r) / QuadElem(2);
}

}  // namespace pellfrac
