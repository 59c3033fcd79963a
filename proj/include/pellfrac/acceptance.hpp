#pragma once

// The end-to-end acceptance suite: one result line per criterion.

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pellfrac/cfrac.hpp"
#include "pellfrac/ecurve.hpp"
#include "pellfrac/families.hpp"
#include "pellfrac/modcurve.hpp"
#include "pellfrac/parallel.hpp"
#include "pellfrac/properties.hpp"
#include "pellfrac/sampling.hpp"

namespace pellfrac::acceptance {

struct Options {
  std::uint64_t seed = 1;
  bool alpha_fault = false;  // run criterion 5 against a perturbed alpha13 table
  unsigned threads = 0;
};

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no limit
};

struct Outcome {
  bool ok;
  std::string detail;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline QuadElem sqrt_d(std::int64_t d) { return QuadElem::root(FieldTag::of(d)); }

inline Outcome check_all(std::initializer_list<std::pair<bool, std::string>> checks) {
  std::ostringstream msg;
  bool ok = true;
  bool first = true;
  for (const auto& [good, text] : checks) {
    ok = ok && good;
    msg << (first ? "" : "; ") << text << (good ? "" : " [FAILED]");
    first = false;
  }
  return {ok, msg.str()};
}

inline std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

inline Outcome period12_over_q17() {
  FamilyModel fm = family_quartic({FamilyTag::per12_X13, QuadElem(2), sqrt_d(17)});
  auto order = infinity_order(fm.model);
  auto e = expand_sqrt(fm.model.f());
  return check_all({{order == 13, "order " + opt(order)}, {e.period == 12, "period " + opt(e.period)}});
}

inline Outcome period18_to_9() {
  FamilyModel fm = family_quartic({FamilyTag::ord10, QuadElem(2), QuadElem()});
  auto e = expand_sqrt(fm.model.f());
  QuadElem mu = sqrt_d(2) / QuadElem(4);
  auto scaled = scaled_expand(fm.model.f(), mu);
  return check_all({{e.period == 18, "period " + opt(e.period)},
                    {e.quasi_period == 9, "r " + opt(e.quasi_period)},
                    {e.k && *e.k == QuadElem(8), "k " + (e.k ? e.k->to_string() : "none")},
                    {mu * mu == QuadElem(Rational(1, 8)), "mu^2 = 1/8"},
                    {scaled.period == 9, "scaled period over Q(sqrt 2) " + opt(scaled.period)}});
}

inline Outcome period22_to_11() {
  FamilyModel fm = family_quartic({FamilyTag::ord12, QuadElem(2), QuadElem()});
  auto e = expand_sqrt(fm.model.f());
  QuadElem mu = sqrt_d(14) / QuadElem(588);
  auto scaled = scaled_expand(fm.model.f(), mu);
  return check_all({{e.period == 22, "period " + opt(e.period)},
                    {e.k && *e.k == QuadElem(24696), "k " + (e.k ? e.k->to_string() : "none")},
                    {QuadElem(24696) == QuadElem(42 * 42 * 14), "24696 = 42^2*14"},
                    {e.k && mu * mu * *e.k == QuadElem(1), "mu^2 = 1/k"},
                    {scaled.period == 11, "scaled period over Q(sqrt 14) " + opt(scaled.period)}});
}

inline Outcome even_periods_over_q() {
  FamilyModel m10 = family_quartic({FamilyTag::per10_i, QuadElem(1), QuadElem()});
  FamilyModel m14 = family_quartic({FamilyTag::per14_i, QuadElem(2), QuadElem()});
  auto e10 = expand_sqrt(m10.model.f());
  auto e14 = expand_sqrt(m14.model.f());
  auto o10 = infinity_order(m10.model);
  auto o14 = infinity_order(m14.model);
  return check_all({{e10.period == 10 && o10 == 6, "per10_i t=1: period " + opt(e10.period) + ", order " + opt(o10)},
                    {e14.period == 14 && o14 == 8, "per14_i t=2: period " + opt(e14.period) + ", order " + opt(o14)}});
}

inline Outcome periods_13_26(const Options& o) {
  const FieldTag F = FieldTag::of(33);
  auto points = solve_points(ModCurveId::X1_14, F, 4, thread_cap(o.threads));
  const QuadElem s_plus = (QuadElem(-3) + sqrt_d(33)) / QuadElem(2);
  const QuadElem s_minus = (QuadElem(-3) - sqrt_d(33)) / QuadElem(2);
  std::vector<ModCurvePoint> targets;
  for (const auto& p : points)
    if (p.t == QuadElem(2) && (p.s == s_plus || p.s == s_minus) && p.admissible && !p.cusp) targets.push_back(p);
  std::vector<std::pair<bool, std::string>> checks;
  checks.emplace_back(targets.size() == 2, "found " + std::to_string(targets.size()) + "/2 admissible points (2, (-3+-sqrt33)/2)");
  std::unique_ptr<pellfrac::detail::CompiledFormula> faulty;
  CertificateOptions copts;
  if (o.alpha_fault) {
    faulty = std::make_unique<pellfrac::detail::CompiledFormula>(corrupted_alpha(13));
    copts.alpha_table = faulty.get();
  }
  for (const auto& p : targets) {
    FamilyModel fm = family_quartic({FamilyTag::per26_X14, p.t, p.s});
    auto order = infinity_order(fm.model);
    auto cert = odd_period_certificate(13, p, copts);
    bool agree = cert.k_square == cert.alpha_square;
    int expected = cert.k_square ? 13 : 26;
    std::string tag = "s=" + p.s.to_string() + ": ";
    checks.emplace_back(order == 14, tag + "order " + opt(order));
    checks.emplace_back(cert.period == 26 || cert.period == 13, tag + "period " + std::to_string(cert.period));
    checks.emplace_back(agree, tag + "k square " + yes_no(cert.k_square) + ", alpha13 square " + yes_no(cert.alpha_square));
    checks.emplace_back(cert.scaled_period.value_or(cert.period) == expected,
                        tag + "odd period 13 " + (cert.k_square ? "realized" : "not realized at this point"));
  }
  std::ostringstream msg;
  bool ok = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    ok = ok && checks[i].first;
    msg << (i ? "; " : "") << checks[i].second << (checks[i].first ? "" : " [FAILED]");
  }
  return {ok, msg.str()};
}

inline std::size_t count_good(const std::vector<ModCurvePoint>& pts) {
  std::size_t n = 0;
  for (const auto& p : pts)
    if (p.admissible && !p.cusp) ++n;
  return n;
}

inline Outcome smallest_field_search(const Options& o) {
  const unsigned th = thread_cap(o.threads);
  std::size_t n14 = count_good(solve_points(ModCurveId::X1_14, FieldTag(), 8, th));
  std::size_t n16 = count_good(solve_points(ModCurveId::X1_16, FieldTag(), 8, th));
  std::size_t n18 = count_good(solve_points(ModCurveId::X1_18, FieldTag(), 8, th));
  std::size_t n14m7 = count_good(solve_points(ModCurveId::X1_14, FieldTag::of(-7), 6, th));
  return check_all({{n14 == 0, "X1(14)(Q) H<=8: " + std::to_string(n14)},
                    {n16 == 0, "X1(16)(Q) H<=8: " + std::to_string(n16)},
                    {n18 == 0, "X1(18)(Q) H<=8: " + std::to_string(n18)},
                    {n14m7 > 0, "X1(14)(Q(sqrt-7)) H<=6: " + std::to_string(n14m7)}});
}

struct PropertyTally {
  int instances = 0;
  int relation = 0, symmetry = 0, roots = 0, recurrence = 0, scaling = 0;
  std::vector<std::string> failures;
};

inline void run_properties(const FamilySpec& spec, PropertyTally& t) {
  FamilyModel fm = family_quartic(spec);
  Poly f = fm.model.f();
  auto e = expand_sqrt(f);
  auto order = infinity_order(fm.model);
  std::string where = std::string(name(spec.tag)) + " t=" + spec.t.to_string();
  auto record = [&](const props::Violations& v, int& counter, const char* what) {
    if (v.empty()) {
      ++counter;
    } else {
      t.failures.push_back(where + " " + what + ": " + v.front());
    }
  };
  ++t.instances;
  if (!order || !e.period) {
    t.failures.push_back(where + ": order " + opt(order) + ", period " + opt(e.period));
    return;
  }
  record(props::period_order_relation(*e.period, *order), t.relation, "period/order");
  record(props::quasi_period_symmetry(e), t.symmetry, "quasi-period symmetry");
  record(props::root_symmetry(e), t.roots, "root symmetry");
  auto rec = props::recurrence(e);
  auto det = props::convergent_determinants(e);
  rec.insert(rec.end(), det.begin(), det.end());
  record(rec, t.recurrence, "recurrence");
  QuadElem mu = e.k && is_square(*e.k) ? qf_sqrt(*e.k)->inverse() : QuadElem(Rational(3, 2));
  auto scaled = scaled_expand(f, mu);
  auto sv = props::scaling_pattern(e, scaled, mu);
  if (e.k && is_square(*e.k) && scaled.period != e.quasi_period) sv.push_back("mu^2 = 1/k but scaled period " + opt(scaled.period));
  record(sv, t.scaling, "scaling");
}

inline Outcome property_suite(const Options& o) {
  std::vector<FamilySpec> specs;
  for (const auto& fi : family_infos) {
    auto some = sample_family_specs(fi.tag, 3, o.seed + static_cast<std::uint64_t>(fi.tag), fi.curve ? 4 : 6);
    specs.insert(specs.end(), some.begin(), some.end());
  }
  // The two quadratic-field instances with square k exercise the odd-period branch.
  specs.push_back({FamilyTag::per12_X13, QuadElem(2), sqrt_d(17)});
  std::vector<PropertyTally> tallies = parallel_map(
      specs.size(),
      [&](std::size_t i) {
        PropertyTally t;
        try {
          run_properties(specs[i], t);
        } catch (const std::exception& ex) {
          ++t.instances;
          t.failures.push_back(std::string(name(specs[i].tag)) + ": " + ex.what());
        }
        return t;
      },
      thread_cap(o.threads));
  PropertyTally total;
  std::set<FamilyTag> tags;
  for (const auto& s : specs) tags.insert(s.tag);
  for (const auto& t : tallies) {
    total.instances += t.instances;
    total.relation += t.relation;
    total.symmetry += t.symmetry;
    total.roots += t.roots;
    total.recurrence += t.recurrence;
    total.scaling += t.scaling;
    total.failures.insert(total.failures.end(), t.failures.begin(), t.failures.end());
  }
  const int n = total.instances;
  std::ostringstream msg;
  msg << n << " instances over " << tags.size() << " tags; (a) " << total.relation << "/" << n << " (b) k^{+-1} " << total.symmetry << "/" << n
      << " (c) " << total.roots << "/" << n << " (d) " << total.recurrence << "/" << n << " (e) " << total.scaling << "/" << n;
  if (!total.failures.empty()) msg << "; first failure: " << total.failures.front();
  bool ok = n >= 20 && tags.size() == family_infos.size() && total.failures.empty();
  return {ok, msg.str()};
}

/// Squares of every element of height <= 2H, restricted to height <= H.
inline std::set<QuadElem, LexLess> brute_force_squares(FieldTag field, unsigned H) {
  std::set<QuadElem, LexLess> squares;
  for (const auto& r : enumerate_elements(field, 2 * H)) {
    QuadElem z = r * r;
    if (height(z) <= H) squares.insert(z);
  }
  return squares;
}

inline Outcome sqrt_oracle(const Options& o) {
  const std::vector<std::int64_t> ds{1, 2, -1, 5};
  auto per_field = parallel_map(
      ds.size(),
      [&](std::size_t i) {
        const FieldTag F = FieldTag::of(ds[i]);
        auto squares = brute_force_squares(F, 8);
        std::size_t checked = 0, disagreements = 0;
        for (const auto& z : enumerate_elements(F, 8)) {
          ++checked;
          auto r = qf_sqrt(z);
          bool fast = r.has_value() && *r * *r == z;
          if (fast != (squares.count(z) > 0) || (r && !fast)) ++disagreements;
        }
        return std::pair{checked, disagreements};
      },
      thread_cap(o.threads));
  std::ostringstream msg;
  bool ok = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    ok = ok && per_field[i].second == 0;
    msg << (i ? "; " : "") << FieldTag::of(ds[i]).name() << ": " << per_field[i].second << " disagreements in " << per_field[i].first;
  }
  return {ok, msg.str()};
}

inline Outcome round_trips(const Options& o) {
  std::mt19937_64 rng(o.seed);
  auto pool = shuffled_rationals(5, o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int curves = 0, roundtrip_ok = 0, maps = 0, maps_ok = 0;
  std::string first_failure;
  while (curves < 50) {
    TateCurve T{QuadElem(pool[pick(rng)]), QuadElem(pool[pick(rng)])};
    if (T.discriminant().is_zero()) continue;
    TateImage img = tate_to_short(T);
    ECPoint P = scalar_mul(img.E, 1 + static_cast<long>(curves % 3), img.P);
    if (P.infinity || P.y.is_zero()) continue;
    ++curves;
    QuarticModel M = quartic_from_point(img.E, P);
    Jacobian J = jacobian_of_quartic(M);
    bool same = J.E == img.E && (J.P == P || J.P == neg(P)) && point_order(J.E, J.P) == point_order(img.E, P);
    if (same) {
      ++roundtrip_ok;
    } else if (first_failure.empty()) {
      first_failure = "round trip failed for b=" + T.b.to_string() + ", c=" + T.c.to_string();
    }
    if (maps < 20) {
      ECPoint Q = scalar_mul(img.E, 2 + curves % 4, P);
      if (Q.infinity || Q.x == P.x) continue;
      ++maps;
      ECPoint X = quartic_maps(img.E, P, MapDirection::forward, Q);
      ECPoint back = quartic_maps(img.E, P, MapDirection::backward, X);
      ECPoint again = quartic_maps(img.E, P, MapDirection::forward, back);
      if (back == Q && again == X) {
        ++maps_ok;
      } else if (first_failure.empty()) {
        first_failure = "map inverse failed at " + Q.to_string();
      }
    }
  }
  std::string detail = "jacobian o quartic_from_point: " + std::to_string(roundtrip_ok) + "/" + std::to_string(curves) +
                       "; eq maps inverse: " + std::to_string(maps_ok) + "/" + std::to_string(maps);
  if (!first_failure.empty()) detail += "; " + first_failure;
  return {roundtrip_ok == 50 && maps == 20 && maps_ok == 20, detail};
}

inline Outcome no_odd_periods_over_q(const Options& o) {
  const unsigned H = 20;
  int sampled = 0, square10 = 0, square12 = 0;
  for (const Rational& q : shuffled_rationals(H, o.seed)) {
    if (sampled >= 100) break;
    QuadElem t(q);
    QuadElem k10, k12;
    try {
      k10 = family_k(FamilyTag::ord10, t);
      k12 = family_k(FamilyTag::ord12, t);
    } catch (const error&) {
      continue;
    }
    ++sampled;
    if (is_square(k10)) ++square10;
    if (is_square(k12)) ++square12;
  }
  return check_all({{sampled == 100, std::to_string(sampled) + " admissible t of height <= 20"},
                    {square10 == 0, "k10 squares: " + std::to_string(square10)},
                    {square12 == 0, "k12 squares: " + std::to_string(square12)}});
}

}  // namespace detail

inline std::vector<Result> run(const Options& o = {}) {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "period 12 over Q(sqrt 17), order 13", 10, [] { return detail::period12_over_q17(); }},
      {2, "order-10 family t=2: period 18, r=9, k=8; period 9 over Q(sqrt 2)", 5, [] { return detail::period18_to_9(); }},
      {3, "order-12 family t=2: period 22, k=24696; period 11 over Q(sqrt 14)", 5, [] { return detail::period22_to_11(); }},
      {4, "even periods 10 and 14 over Q", 5, [] { return detail::even_periods_over_q(); }},
      {5, "periods 13/26 over Q(sqrt 33) with dual square oracles", 60, [&] { return detail::periods_13_26(o); }},
      {6, "smallest-field searches for X1(14), X1(16), X1(18)", 120, [&] { return detail::smallest_field_search(o); }},
      {7, "structural property suite over sampled family instances", 0, [&] { return detail::property_suite(o); }},
      {8, "qf_sqrt agrees with brute-force squaring, height <= 8", 60, [&] { return detail::sqrt_oracle(o); }},
      {9, "quartic/Jacobian round trips and inverse birational maps", 0, [&] { return detail::round_trips(o); }},
      {10, "k10 and k12 never rational squares on 100 sampled t", 0, [&] { return detail::no_odd_periods_over_q(o); }},
  };
  std::vector<Result> results;
  for (const auto& c : criteria) {
    Result r{c.id, c.title, false, "", 0, c.limit};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome out = c.fn();
      r.passed = out.ok;
      r.detail = out.detail;
    } catch (const std::exception& ex) {
      r.detail = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && c.limit > 0 && r.seconds >= c.limit) {
      r.passed = false;
      r.detail += "; exceeded time limit";
    }
    results.push_back(std::move(r));
  }
  return results;
}

/// "PASS  3  title :: detail", optionally with elapsed time.
inline std::string format(const Result& r, bool with_time) {
  std::ostringstream line;
  line << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " :: " << r.detail;
  if (with_time) {
    line.setf(std::ios::fixed);
    line.precision(3);
    line << " (" << r.seconds << " s";
    if (r.limit_seconds > 0) line << ", limit " << r.limit_seconds << " s";
    line << ")";
  }
  return line.str();
}

}  // namespace pellfrac::acceptance
