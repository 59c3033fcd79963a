#pragma once

// Continued fraction expansion of sqrt(f) for quartic f over Q(sqrt d),
// driven by the (P_h, Q_h) recurrence.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellfrac/errors.hpp"
#include "pellfrac/poly.hpp"
#include "pellfrac/qfield.hpp"

namespace pellfrac {

inline constexpr int default_max_steps = 80;

/// Complete quotient alpha_h = (P + sqrt f)/Q with partial quotient a.
struct CFStep {
  int h = 0;
  Poly P;
  Poly Q;
  Poly a;
};

struct CFExpansion {
  Poly f;
  Poly root_part;  // A with deg(f - A^2) <= 1; equals a0
  std::vector<CFStep> steps;
  std::optional<int> quasi_period;
  std::optional<QuadElem> k;
  std::optional<int> period;
  std::optional<int> period_start;

  const Poly& a0() const { return steps.front().a; }
  bool periodic() const { return period.has_value(); }
};

namespace detail {

inline void check_supported_quartic(const Poly& f) {
  if (f.degree() != 4) throw error(errc::unsupported_quartic, "f must have degree 4, got " + f.to_string());
  if (!is_squarefree(f)) throw error(errc::not_squarefree, f.to_string() + " is not square-free");
}

inline Poly partial_quotient(const Poly& P, const Poly& Q, const Poly& root_part) {
  return divmod(P + root_part, Q).quot;
}

/// Fill quasi-period, k and the period rule from the recorded steps.
inline void detect_quasi_period(CFExpansion& e) {
  for (std::size_t h = 1; h < e.steps.size(); ++h) {
    const CFStep& st = e.steps[h];
    if (st.Q.degree() != 0) continue;
    const Poly two_a0 = e.a0() * QuadElem(2);
    QuadElem k = two_a0.lead() / st.a.lead();
    if (two_a0 != st.a * k)
      throw error(errc::structural_violation, "2*a0/a_r is not constant at r=" + std::to_string(h) + ": a_r = " + st.a.to_string());
    if (st.P != e.a0() || Poly::constant(k) != st.Q)
      throw error(errc::structural_violation,
                  "quasi-period state mismatch at r=" + std::to_string(h) + ": P_r = " + st.P.to_string() + ", Q_r = " + st.Q.to_string() + ", k = " + k.to_string());
    e.quasi_period = static_cast<int>(h);
    e.k = k;
    return;
  }
}

}  // namespace detail

/// One step of the recurrence P' = a Q - P, Q' = (f - P'^2)/Q, a' = quot(P' + A, Q').
inline CFStep cf_step(const Poly& f, const Poly& root_part, const CFStep& prev) {
  CFStep next;
  next.h = prev.h + 1;
  next.P = prev.a * prev.Q - prev.P;
  Poly rest = f - next.P * next.P;
  if (rest.is_zero()) throw error(errc::not_squarefree, "Q_" + std::to_string(next.h) + " vanished; f is a square");
  next.Q = exact_div(rest, prev.Q);
  next.a = detail::partial_quotient(next.P, next.Q, root_part);
  return next;
}

inline CFStep cf_step(const Poly& f, const CFStep& prev) { return cf_step(f, poly_part_sqrt(f), prev); }

namespace detail {

inline CFExpansion expand_with_root(const Poly& f, const Poly& root_part, int max_steps) {
  if (max_steps < 1) throw error(errc::degenerate_parameters, "max_steps must be positive");
  CFExpansion e;
  e.f = f;
  e.root_part = root_part;
  const FieldTag field = join(f.field(), root_part.field());
  CFStep st{0, Poly(field), Poly::constant(QuadElem(1, field)), Poly(field)};
  st.a = partial_quotient(st.P, st.Q, root_part);
  e.steps.push_back(st);
  for (int h = 1; h <= max_steps; ++h) {
    CFStep next = cf_step(f, root_part, e.steps.back());
    for (std::size_t j = 1; j < e.steps.size(); ++j) {
      if (e.steps[j].P == next.P && e.steps[j].Q == next.Q) {
        e.period_start = static_cast<int>(j);
        e.period = h - static_cast<int>(j);
        break;
      }
    }
    if (e.period) break;
    e.steps.push_back(std::move(next));
  }
  detect_quasi_period(e);
  if (e.period && e.quasi_period && *e.period_start == 1) {
    int expected = *e.k == QuadElem(1) ? *e.quasi_period : 2 * *e.quasi_period;
    if (expected != *e.period)
      throw error(errc::structural_violation, "state period " + std::to_string(*e.period) + " disagrees with quasi-period rule (" + std::to_string(expected) + ")");
  }
  return e;
}

}  // namespace detail

/// Expands sqrt(f) until the state (P_h, Q_h) with h >= 1 repeats or max_steps
/// steps have been taken. An absent period means "not detected".
inline CFExpansion expand_sqrt(const Poly& f, int max_steps = default_max_steps) {
  detail::check_supported_quartic(f);
  return detail::expand_with_root(f, poly_part_sqrt(f), max_steps);
}

/// Expansion of mu*sqrt(f), i.e. of sqrt(mu^2 f) with the root branch whose
/// polynomial part is mu*a0.
inline CFExpansion scaled_expand(const Poly& f, const QuadElem& mu, int max_steps = default_max_steps) {
  if (mu.is_zero()) throw error(errc::degenerate_parameters, "mu must be nonzero");
  detail::check_supported_quartic(f);
  auto root = qf_sqrt(f.lead());
  if (!root) throw error(errc::unsupported_quartic, "leading coefficient " + f.lead().to_string() + " is not a square in " + f.field().name());
  Poly g = f * (mu * mu);
  return detail::expand_with_root(g, poly_part_sqrt(g, mu * *root), max_steps);
}

struct QuasiPeriod {
  int r;
  QuadElem k;
};

inline std::optional<QuasiPeriod> quasi_period(const CFExpansion& e) {
  if (!e.quasi_period) return std::nullopt;
  return QuasiPeriod{*e.quasi_period, *e.k};
}

inline std::optional<int> period(const Poly& f, int max_steps = default_max_steps) { return expand_sqrt(f, max_steps).period; }

struct Convergent {
  Poly p;
  Poly q;
};

/// p_h/q_h with p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1.
inline Convergent convergents(const CFExpansion& e, int h) {
  if (h < 0 || h >= static_cast<int>(e.steps.size()))
    throw error(errc::degenerate_parameters, "convergent index " + std::to_string(h) + " outside computed steps");
  const FieldTag field = e.f.field();
  Poly p_prev = Poly::constant(QuadElem(1, field)), p_prev2(field);
  Poly q_prev(field), q_prev2 = Poly::constant(QuadElem(1, field));
  for (int i = 0; i <= h; ++i) {
    const Poly& a = e.steps[static_cast<std::size_t>(i)].a;
    Poly p = a * p_prev + p_prev2;
    Poly q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, std::move(p));
    q_prev2 = std::exchange(q_prev, std::move(q));
  }
  return {p_prev, q_prev};
}

struct SBSequences {
  // Indexed by h; entries 0 and 1 are unused placeholders.
  std::vector<QuadElem> s;
  std::vector<QuadElem> b;
};

/// The s_h and b_h sequences from the closed-form description of the partial
/// quotients of sqrt((x^2+u)^2 - 4v(x+w)), evaluated literally.
inline SBSequences sb_sequences(const QuadElem& /*u*/, const QuadElem& v, const QuadElem& w, int hmax) {
  if (hmax < 2) throw error(errc::degenerate_parameters, "hmax must be at least 2");
  const QuadElem denom3 = QuadElem(1) - QuadElem(2) * w;
  auto degenerate = [](const std::string& what) { return error(errc::degenerate_parameters, what); };
  SBSequences out;
  out.s.assign(static_cast<std::size_t>(hmax) + 1, QuadElem(0, v.field()));
  out.b = out.s;
  out.s[2] = QuadElem(1, v.field());
  if (hmax >= 3) {
    if (denom3.is_zero()) throw degenerate("s_3 has a pole: -2w+1 = 0");
    out.s[3] = v / denom3;
  }
  for (int h = 4; h <= hmax; ++h) {
    const QuadElem& s1 = out.s[static_cast<std::size_t>(h - 1)];
    const QuadElem& s2 = out.s[static_cast<std::size_t>(h - 2)];
    QuadElem d = s1 * (s1 - QuadElem(1)) * s2;
    if (d.is_zero()) throw degenerate("s_" + std::to_string(h) + " has a pole");
    out.s[static_cast<std::size_t>(h)] = v / d;
  }
  QuadElem even_prod(1), odd_prod(1);  // s2 s4 ... and s3 s5 ...
  for (int h = 2; h <= hmax; ++h) {
    const QuadElem& sh = out.s[static_cast<std::size_t>(h)];
    if (sh.is_zero()) throw degenerate("s_" + std::to_string(h) + " vanishes");
    if (h % 2 == 0) {
      even_prod *= sh;
      out.b[static_cast<std::size_t>(h)] = odd_prod / even_prod;
    } else {
      odd_prod *= sh;
      out.b[static_cast<std::size_t>(h)] = QuadElem(4) * v * even_prod / odd_prod;
    }
  }
  return out;
}

/// lead(a_h) * b_h / 2 for 2 <= h < min(hmax+1, steps); equals 1 wherever the
/// closed form a_h = 2(x - c_h)/b_h agrees with the expansion.
inline std::vector<QuadElem> sb_crosscheck(const CFExpansion& e, const SBSequences& sb) {
  std::vector<QuadElem> ratios;
  const std::size_t last = std::min(sb.b.size(), e.steps.size());
  for (std::size_t h = 2; h < last; ++h) ratios.push_back(e.steps[h].a.lead() * sb.b[h] / QuadElem(2));
  return ratios;
}

/// For a linear partial quotient lambda*(x - c), the root c.
inline std::optional<QuadElem> linear_root(const Poly& a) {
  if (a.degree() != 1) return std::nullopt;
  return -a.coeff(0) / a.coeff(1);
}

}  // namespace pellfrac
