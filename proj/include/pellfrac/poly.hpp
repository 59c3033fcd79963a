#pragma once

// Dense univariate polynomials over Q(sqrt d).

#include <string>
#include <utility>
#include <vector>

#include "pellfrac/errors.hpp"
#include "pellfrac/qfield.hpp"

namespace pellfrac {

class Poly {
 public:
  explicit Poly(FieldTag field = {}) : field_(field) {}

  /// Coefficients lowest degree first; trailing zeros are dropped.
  explicit Poly(std::vector<QuadElem> coeffs, FieldTag field = {}) : c_(std::move(coeffs)), field_(field) {
    for (const auto& c : c_) field_ = join(field_, c.field());
    normalize();
  }

  static Poly constant(const QuadElem& c) { return Poly({c}, c.field()); }

  /// c * x^k
  static Poly monomial(const QuadElem& c, int k) {
    std::vector<QuadElem> v(static_cast<std::size_t>(k) + 1, QuadElem(0, c.field()));
    v.back() = c;
    return Poly(std::move(v), c.field());
  }

  static Poly x(FieldTag field = {}) { return monomial(QuadElem(1, field), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  FieldTag field() const { return field_; }
  const std::vector<QuadElem>& coeffs() const { return c_; }

  QuadElem coeff(int i) const {
    if (i < 0 || i > degree()) return QuadElem(0, field_);
    return c_[static_cast<std::size_t>(i)];
  }

  const QuadElem& lead() const {
    if (c_.empty()) throw error(errc::structural_violation, "leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    field_ = join(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), QuadElem(0, field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }

  Poly& operator*=(const QuadElem& s) {
    field_ = join(field_, s.field());
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(Poly f, const QuadElem& s) { return f *= s; }
  friend Poly operator*(const QuadElem& s, Poly f) { return f *= s; }

  friend Poly operator*(const Poly& f, const Poly& g) {
    FieldTag field = join(f.field_, g.field_);
    if (f.is_zero() || g.is_zero()) return Poly(field);
    std::vector<QuadElem> r(f.c_.size() + g.c_.size() - 1, QuadElem(0, field));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (f.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] += f.c_[i] * g.c_[j];
    }
    return Poly(std::move(r), field);
  }

  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const auto& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string cs = c.to_string();
      bool compound = !c.is_rational() && sgn(c.a()) != 0;
      if (compound) cs = "(" + cs + ")";
      if (!out.empty()) out += (cs.front() == '-' ? " - " : " + ");
      if (!out.empty() && cs.front() == '-') cs.erase(0, 1);
      if (i == 0) {
        out += cs;
        continue;
      }
      if (cs == "1") {
        cs.clear();
      } else if (cs == "-1") {
        cs = "-";
      } else {
        cs += "*";
      }
      out += cs + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    for (auto& c : c_)
      if (c.field() != field_) c = c.in(field_);
  }

  std::vector<QuadElem> c_;
  FieldTag field_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

/// f = quot * g + rem with deg rem < deg g.
inline DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
  FieldTag field = join(f.field(), g.field());
  std::vector<QuadElem> r = f.coeffs();
  const int dg = g.degree();
  const QuadElem inv_lead = g.lead().inverse();
  int dr = f.degree();
  std::vector<QuadElem> q(static_cast<std::size_t>(std::max(dr - dg + 1, 0)), QuadElem(0, field));
  for (; dr >= dg; --dr) {
    const QuadElem& top = r[static_cast<std::size_t>(dr)];
    if (top.is_zero()) continue;
    QuadElem c = top * inv_lead;
    const int shift = dr - dg;
    for (int i = 0; i <= dg; ++i) r[static_cast<std::size_t>(i + shift)] -= c * g.coeff(i);
    q[static_cast<std::size_t>(shift)] = c;
  }
  r.resize(static_cast<std::size_t>(std::max(dg, 0)), QuadElem(0, field));
  return {Poly(std::move(q), field), Poly(std::move(r), field)};
}

inline Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).quot; }
inline Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).rem; }

/// Quotient of an exact division; a nonzero remainder is an invariant violation.
inline Poly exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw error(errc::structural_violation, "inexact division of " + f.to_string() + " by " + g.to_string());
  return q;
}

inline Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f * f.lead().inverse();
}

/// Monic gcd by the Euclidean algorithm over K.
inline Poly gcd(Poly f, Poly g) {
  if (f.is_zero() && g.is_zero()) throw error(errc::division_by_zero, "gcd(0, 0)");
  while (!g.is_zero()) {
    Poly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f);
}

inline Poly derivative(const Poly& f) {
  if (f.degree() < 1) return Poly(f.field());
  std::vector<QuadElem> d;
  for (int i = 1; i <= f.degree(); ++i) d.push_back(f.coeff(i) * QuadElem(i));
  return Poly(std::move(d), f.field());
}

inline bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw error(errc::structural_violation, "square-free test of zero polynomial");
  return gcd(f, derivative(f)).degree() == 0;
}

/// Horner evaluation.
inline QuadElem eval(const Poly& f, const QuadElem& z) {
  QuadElem acc(0, join(f.field(), z.field()));
  for (int i = f.degree(); i >= 0; --i) acc = acc * z + f.coeff(i);
  return acc;
}

/// The quadratic A with deg(f - A^2) <= 1 and lead(A) = lead_root, where
/// lead_root^2 = lead(f).
inline Poly poly_part_sqrt(const Poly& f, const QuadElem& lead_root) {
  if (f.degree() != 4) throw error(errc::unsupported_quartic, "degree " + std::to_string(f.degree()) + ", expected 4");
  if (lead_root * lead_root != f.lead()) throw error(errc::unsupported_quartic, "lead_root does not square to the leading coefficient");
  QuadElem two_lead = QuadElem(2) * lead_root;
  QuadElem beta = f.coeff(3) / two_lead;
  QuadElem gamma = (f.coeff(2) - beta * beta) / two_lead;
  return Poly({gamma, beta, lead_root}, f.field());
}

/// Polynomial part of sqrt(f) for a quartic whose leading coefficient is a
/// square in K; the leading coefficient of the result is the canonical root.
inline Poly poly_part_sqrt(const Poly& f) {
  if (f.degree() != 4) throw error(errc::unsupported_quartic, "degree " + std::to_string(f.degree()) + ", expected 4");
  auto root = qf_sqrt(f.lead());
  if (!root) throw error(errc::unsupported_quartic, "leading coefficient " + f.lead().to_string() + " is not a square in " + f.field().name());
  return poly_part_sqrt(f, *root);
}

}  // namespace pellfrac
