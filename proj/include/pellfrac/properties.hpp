#pragma once

// Checkers for the structural identities of an expansion. Each returns a list
// of human-readable violations; an empty list means the identity holds.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pellfrac/cfrac.hpp"

namespace pellfrac::props {

using Violations = std::vector<std::string>;

/// P_{h+1} + P_h = a_h Q_h, Q_{h+1} Q_h = f - P_{h+1}^2, and the degree
/// constraints on P_h, Q_h and a_h for h >= 1.
inline Violations recurrence(const CFExpansion& e) {
  Violations out;
  const std::string at = " at h=";
  for (std::size_t h = 0; h + 1 < e.steps.size(); ++h) {
    const auto& cur = e.steps[h];
    const auto& nxt = e.steps[h + 1];
    if (nxt.P + cur.P != cur.a * cur.Q) out.push_back("P_{h+1}+P_h != a_h Q_h" + at + std::to_string(h));
    if (nxt.Q * cur.Q != e.f - nxt.P * nxt.P) out.push_back("Q_{h+1}Q_h != f-P_{h+1}^2" + at + std::to_string(h));
  }
  for (std::size_t h = 1; h < e.steps.size(); ++h) {
    const auto& st = e.steps[h];
    if (st.Q.degree() > 1) out.push_back("deg Q_h > 1" + at + std::to_string(h));
    if (st.P.degree() != 2) out.push_back("deg P_h != 2" + at + std::to_string(h));
    int da = st.a.degree();
    if (da != 1 && da != 2) out.push_back("deg a_h not in {1,2}" + at + std::to_string(h));
    if ((da == 2) != (st.Q.degree() == 0)) out.push_back("deg a_h = 2 iff deg Q_h = 0 fails" + at + std::to_string(h));
  }
  return out;
}

/// Within one quasi-period: a_i = k^{(-1)^i} a_{r-i} for 1 <= i <= r-1, and
/// k = 1 whenever r is even.
inline Violations quasi_period_symmetry(const CFExpansion& e) {
  Violations out;
  if (!e.quasi_period) return {"no quasi-period"};
  const int r = *e.quasi_period;
  const QuadElem& k = *e.k;
  if (r % 2 == 0 && k != QuadElem(1)) out.push_back("r = " + std::to_string(r) + " is even but k = " + k.to_string());
  for (int i = 1; i <= r - 1; ++i) {
    const Poly& ai = e.steps[static_cast<std::size_t>(i)].a;
    const Poly& aj = e.steps[static_cast<std::size_t>(r - i)].a;
    QuadElem factor = i % 2 == 0 ? k : k.inverse();
    if (ai != aj * factor) out.push_back("a_" + std::to_string(i) + " != k^" + (i % 2 == 0 ? "1" : "-1") + " a_" + std::to_string(r - i));
  }
  return out;
}

/// Roots of the linear partial quotients are symmetric: c_h = c_{n-h}.
inline Violations root_symmetry(const CFExpansion& e) {
  if (!e.period) return {"no period"};
  Violations out;
  const int n = *e.period;
  for (int h = 1; h <= n - 1; ++h) {
    auto ch = linear_root(e.steps[static_cast<std::size_t>(h)].a);
    auto cn = linear_root(e.steps[static_cast<std::size_t>(n - h)].a);
    if (ch.has_value() != cn.has_value() || (ch && *ch != *cn)) out.push_back("c_" + std::to_string(h) + " != c_" + std::to_string(n - h));
  }
  return out;
}

/// a_h(mu sqrt f) = mu^{(-1)^h} a_h(sqrt f) on the common range of steps.
inline Violations scaling_pattern(const CFExpansion& base, const CFExpansion& scaled, const QuadElem& mu) {
  Violations out;
  const std::size_t n = std::min(base.steps.size(), scaled.steps.size());
  const QuadElem inv = mu.inverse();
  for (std::size_t h = 0; h < n; ++h) {
    const QuadElem& factor = h % 2 == 0 ? mu : inv;
    if (scaled.steps[h].a != base.steps[h].a * factor) out.push_back("scaled a_" + std::to_string(h) + " breaks the alternation");
  }
  return out;
}

/// p_h q_{h-1} - p_{h-1} q_h = (-1)^{h+1}.
inline Violations convergent_determinants(const CFExpansion& e) {
  Violations out;
  const FieldTag field = e.f.field();
  Poly p_prev = Poly::constant(QuadElem(1, field)), p_prev2(field);
  Poly q_prev(field), q_prev2 = Poly::constant(QuadElem(1, field));
  for (std::size_t h = 0; h < e.steps.size(); ++h) {
    const Poly& a = e.steps[h].a;
    Poly p = a * p_prev + p_prev2;
    Poly q = a * q_prev + q_prev2;
    Poly det = p * q_prev - p_prev * q;
    if (det != Poly::constant(QuadElem(h % 2 == 0 ? -1 : 1))) out.push_back("determinant identity fails at h=" + std::to_string(h));
    p_prev2 = std::exchange(p_prev, std::move(p));
    q_prev2 = std::exchange(q_prev, std::move(q));
  }
  return out;
}

/// period in {n-1, 2(n-1)}, the latter only for even n.
inline Violations period_order_relation(int period, int order) {
  if (period == order - 1) return {};
  if (period == 2 * (order - 1) && order % 2 == 0) return {};
  return {"period " + std::to_string(period) + " incompatible with order " + std::to_string(order)};
}

}  // namespace pellfrac::props
