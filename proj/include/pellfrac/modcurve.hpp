#pragma once

// The modular curves X1(N) and X1(2,2N) in the form s^2 + p(t) s = h(t),
// with cusp loci, per-family nonvanishing conditions and bounded-height
// point search over Q(sqrt d).

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pellfrac/errors.hpp"
#include "pellfrac/parallel.hpp"
#include "pellfrac/poly.hpp"
#include "pellfrac/qfield.hpp"

namespace pellfrac {

enum class ModCurveId { X1_11, X1_13, X1_14, X1_15, X1_16, X1_18, X1_2_10, X1_2_12 };

inline constexpr std::array<ModCurveId, 8> all_mod_curves = {ModCurveId::X1_11, ModCurveId::X1_13, ModCurveId::X1_14, ModCurveId::X1_15,
                                                             ModCurveId::X1_16, ModCurveId::X1_18, ModCurveId::X1_2_10, ModCurveId::X1_2_12};

inline std::string_view name(ModCurveId id) {
  switch (id) {
    case ModCurveId::X1_11: return "X1(11)";
    case ModCurveId::X1_13: return "X1(13)";
    case ModCurveId::X1_14: return "X1(14)";
    case ModCurveId::X1_15: return "X1(15)";
    case ModCurveId::X1_16: return "X1(16)";
    case ModCurveId::X1_18: return "X1(18)";
    case ModCurveId::X1_2_10: return "X1(2,10)";
    case ModCurveId::X1_2_12: return "X1(2,12)";
  }
  return "?";
}

/// Accepts "13", "X1(13)", "2,10", "2_10" and "X1(2,10)".
inline ModCurveId parse_curve_id(std::string_view text) {
  std::string key;
  for (char ch : text)
    if (ch != ' ') key += ch;
  if (key.starts_with("X1(") && key.ends_with(")")) key = key.substr(3, key.size() - 4);
  std::replace(key.begin(), key.end(), '_', ',');
  static const std::pair<std::string_view, ModCurveId> table[] = {
      {"11", ModCurveId::X1_11}, {"13", ModCurveId::X1_13}, {"14", ModCurveId::X1_14},     {"15", ModCurveId::X1_15},
      {"16", ModCurveId::X1_16}, {"18", ModCurveId::X1_18}, {"2,10", ModCurveId::X1_2_10}, {"2,12", ModCurveId::X1_2_12},
  };
  for (const auto& [k, id] : table)
    if (k == key) return id;
  throw error(errc::unsupported_curve, "unsupported modular curve '" + std::string(text) + "'");
}

namespace detail {

inline Poly int_poly(std::initializer_list<long> lowest_first) {
  std::vector<QuadElem> c;
  for (long v : lowest_first) c.emplace_back(v);
  return Poly(std::move(c));
}

inline Poly product(std::initializer_list<Poly> factors) {
  Poly acc = int_poly({1});
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

struct CurveData {
  Poly p;  // s^2 + p(t) s = h(t)
  Poly h;
  std::vector<Poly> cusp_factors;
  std::vector<Poly> admissibility_factors;
  std::string admissibility_text;
};

inline const CurveData& curve_data(ModCurveId id) {
  static const std::array<CurveData, 8> data = [] {
    using P = std::initializer_list<long>;
    auto ip = [](P c) { return int_poly(c); };
    const Poly t = ip({0, 1});
    const Poly tm1 = ip({-1, 1});
    const Poly tp1 = ip({1, 1});
    std::array<CurveData, 8> d;
    // X1(11): s^2 - s = t^3 - t^2
    d[0] = {ip({-1}), ip({0, 0, -1, 1}),
            {t, tm1, ip({1, -2, -16, 35, -18, 1})},
            {t, tm1, ip({1, -2, -16, 35, -18, 1})},
            "t(t-1)(t^5-18t^4+35t^3-16t^2-2t+1) != 0"};
    // X1(13): s^2 = t^6 - 2t^5 + t^4 - 2t^3 + 6t^2 - 4t + 1
    d[1] = {Poly(), ip({1, -4, 6, -2, 1, -2, 1}),
            {t, tm1, ip({1, 1, -4, 1})},
            {t, tm1, ip({1, 1, -4, 1})},
            "t(t-1)(t^3-4t^2+t+1) != 0"};
    // X1(14): s^2 + (t+1)s = t^3 - t
    d[2] = {tp1, ip({0, -1, 0, 1}),
            {t, tm1, tp1, ip({1, -1, -9, 1}), ip({1, -1, -2, 1})},
            {t, tm1, tp1, ip({1, -1, -9, 1}), ip({1, -1, -2, 1})},
            "t(t-1)(t+1)(t^3-9t^2-t+1)(t^3-2t^2-t+1) != 0"};
    // X1(15): s^2 + (t+1)s = t^3 + t^2
    d[3] = {tp1, ip({0, 0, 1, 1}),
            {t, tp1, ip({1, 2, 4, 3, 1}), ip({1, 2, -6, -7, 1})},
            {t, tp1, ip({1, 1, 1}), ip({1, 2, 4, 3, 1}), ip({1, 2, -6, -7, 1})},
            "t(t+1)(t^2+t+1)(t^4+3t^3+4t^2+2t+1)(t^4-7t^3-6t^2+2t+1) != 0"};
    // X1(16): s^2 = t(t^2+1)(t^2+2t-1)
    d[4] = {Poly(), product({t, ip({1, 0, 1}), ip({-1, 2, 1})}),
            {t, tm1, tp1, ip({-1, -2, 1}), ip({-1, 2, 1})},
            {t, tm1, tp1, ip({1, 0, 1}), ip({-1, -2, 1}), ip({-1, 2, 1})},
            "t(t-1)(t+1)(t^2+1)(t^2-2t-1)(t^2+2t-1) != 0"};
    // X1(18): s^2 = t^6 + 2t^5 + 5t^4 + 10t^3 + 10t^2 + 4t + 1
    d[5] = {Poly(), ip({1, 4, 10, 10, 5, 2, 1}),
            {t, tp1, ip({1, 1, 1}), ip({-1, -3, 1})},
            {t, tp1, ip({1, 1, 1}), ip({-1, -3, 0, 1})},
            "t(t+1)(t^2+t+1)(t^3-3t-1) != 0"};
    // X1(2,10): s^2 = t^3 + t^2 - t
    d[6] = {Poly(), ip({0, -1, 1, 1}),
            {t, tm1, tp1, ip({-1, 1, 1}), ip({-1, -4, 1})},
            {t, tm1, tp1, ip({-1, 1, 1}), ip({-1, -4, 1})},
            "t(t-1)(t+1)(t^2+t-1)(t^2-4t-1) != 0"};
    // X1(2,12): s^2 = t^3 - t^2 + t
    d[7] = {Poly(), ip({0, 1, -1, 1}),
            {t, tm1, ip({-1, 2}), ip({1, -1, 2}), ip({-1, -3, 3}), ip({-1, -6, 6})},
            {t, tm1, ip({-1, 2}), ip({1, -1, 2}), ip({-1, -3, 3}), ip({-1, -6, 6})},
            "t(t-1)(2t-1)(2t^2-t+1)(3t^2-3t-1)(6t^2-6t-1) != 0"};
    return d;
  }();
  return data[static_cast<std::size_t>(id)];
}

}  // namespace detail

/// Curve equation residual s^2 + p(t)s - h(t).
inline QuadElem curve_residual(ModCurveId id, const QuadElem& t, const QuadElem& s) {
  const auto& c = detail::curve_data(id);
  return s * s + eval(c.p, t) * s - eval(c.h, t);
}

inline bool on_curve(ModCurveId id, const QuadElem& t, const QuadElem& s) { return curve_residual(id, t, s).is_zero(); }

inline bool is_cusp(ModCurveId id, const QuadElem& t) {
  for (const auto& f : detail::curve_data(id).cusp_factors)
    if (eval(f, t).is_zero()) return true;
  return false;
}

/// True iff the family's nonvanishing product is nonzero at t. The products
/// involve t only; s is accepted for interface symmetry.
inline bool admissible(ModCurveId id, const QuadElem& t, const QuadElem& /*s*/ = QuadElem()) {
  for (const auto& f : detail::curve_data(id).admissibility_factors)
    if (eval(f, t).is_zero()) return false;
  return true;
}

inline const std::string& admissibility_condition(ModCurveId id) { return detail::curve_data(id).admissibility_text; }

struct ModCurvePoint {
  ModCurveId id = ModCurveId::X1_13;
  QuadElem t;
  QuadElem s;
  bool on_curve = false;
  bool cusp = false;
  bool admissible = false;
};

inline ModCurvePoint make_point(ModCurveId id, const QuadElem& t, const QuadElem& s) {
  return {id, t, s, on_curve(id, t, s), is_cusp(id, t), admissible(id, t, s)};
}

/// All s in the field of t (or `field`) with (t, s) on the curve, in
/// increasing lexicographic order.
inline std::vector<QuadElem> s_roots(ModCurveId id, const QuadElem& t, FieldTag field = {}) {
  field = join(field, t.field());
  const auto& c = detail::curve_data(id);
  QuadElem pt = eval(c.p, t).in(field);
  QuadElem disc = pt * pt + QuadElem(4) * eval(c.h, t);
  auto r = qf_sqrt(disc.in(field));
  if (!r) return {};
  std::vector<QuadElem> out{(-pt + *r) / QuadElem(2)};
  if (!r->is_zero()) out.push_back((-pt - *r) / QuadElem(2));
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

/// Points with t of height <= H in `field`, ordered by the enumeration order
/// of t and then by s.
inline std::vector<ModCurvePoint> solve_points(ModCurveId id, FieldTag field, unsigned H, unsigned threads = 1) {
  const std::vector<QuadElem> ts = enumerate_elements(field, H);
  auto per_t = parallel_map(
      ts.size(),
      [&](std::size_t i) {
        std::vector<ModCurvePoint> pts;
        for (const auto& s : s_roots(id, ts[i], field)) pts.push_back(make_point(id, ts[i], s));
        return pts;
      },
      thread_cap(threads));
  std::vector<ModCurvePoint> out;
  for (auto& v : per_t) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace pellfrac
