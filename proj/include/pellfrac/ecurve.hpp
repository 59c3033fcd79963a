#pragma once

// Elliptic curves in Tate normal form and short Weierstrass form, the chord
// and tangent law, point orders, and the quartic models y^2 = f(x) attached
// to an affine point.

#include <optional>
#include <string>
#include <utility>

#include "pellfrac/errors.hpp"
#include "pellfrac/poly.hpp"
#include "pellfrac/qfield.hpp"

namespace pellfrac {

inline constexpr int default_order_bound = 24;

/// y^2 + (1-c)xy - by = x^3 - bx^2
struct TateCurve {
  QuadElem b;
  QuadElem c;

  QuadElem discriminant() const {
    const QuadElem one(1);
    QuadElem b2 = (one - c) * (one - c) - QuadElem(4) * b;
    QuadElem b4 = -b * (one - c);
    QuadElem b6 = b * b;
    QuadElem b8 = -(b * b * b);
    return -(b2 * b2 * b8) - QuadElem(8) * b4 * b4 * b4 - QuadElem(27) * b6 * b6 + QuadElem(9) * b2 * b4 * b6;
  }
};

/// y^2 = x^3 + Ax + B
struct ShortWeierstrass {
  QuadElem A;
  QuadElem B;

  QuadElem discriminant() const { return QuadElem(4) * A * A * A + QuadElem(27) * B * B; }
  FieldTag field() const { return join(A.field(), B.field()); }
  friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
};

struct ECPoint {
  bool infinity = true;
  QuadElem x;
  QuadElem y;

  static ECPoint identity() { return {}; }
  static ECPoint affine(QuadElem x, QuadElem y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const ECPoint& p, const ECPoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }

  std::string to_string() const { return infinity ? "O" : "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

inline bool on_curve(const ShortWeierstrass& E, const ECPoint& P) {
  if (P.infinity) return true;
  return P.y * P.y == P.x * P.x * P.x + E.A * P.x + E.B;
}

namespace detail {
inline void require_on_curve(const ShortWeierstrass& E, const ECPoint& P) {
  if (!on_curve(E, P)) throw error(errc::not_on_curve, P.to_string() + " is not on y^2 = x^3 + (" + E.A.to_string() + ")x + (" + E.B.to_string() + ")");
}
}  // namespace detail

struct TateImage {
  ShortWeierstrass E;
  ECPoint P;  // image of (0,0)
};

/// Completes the square in y and shifts x by b2/12. The point (0,0) maps to
/// (b2/12, -b/2).
inline TateImage tate_to_short(const TateCurve& T) {
  if (T.discriminant().is_zero())
    throw error(errc::singular_curve, "Tate curve with b = " + T.b.to_string() + ", c = " + T.c.to_string() + " is singular");
  const QuadElem& b = T.b;
  const QuadElem& c = T.c;
  const QuadElem cm1 = c - QuadElem(1);
  const QuadElem cm1_2 = cm1 * cm1;
  QuadElem A = (QuadElem(-16) * b * b - cm1_2 * cm1_2 + QuadElem(8) * b * (QuadElem(-2) + c + c * c)) / QuadElem(48);
  // B = -c6/864 with c6 = -b2^3 + 36 b2 b4 - 216 b6
  QuadElem b2 = cm1_2 - QuadElem(4) * b;
  QuadElem b4 = b * cm1;
  QuadElem b6 = b * b;
  QuadElem c6 = -(b2 * b2 * b2) + QuadElem(36) * b2 * b4 - QuadElem(216) * b6;
  QuadElem B = -c6 / QuadElem(864);
  TateImage out{{A, B}, ECPoint::affine(b2 / QuadElem(12), -b / QuadElem(2))};
  if (!on_curve(out.E, out.P)) throw error(errc::structural_violation, "image of (0,0) is off the short Weierstrass model");
  return out;
}

inline ECPoint neg(const ECPoint& P) {
  if (P.infinity) return P;
  return ECPoint::affine(P.x, -P.y);
}

namespace detail {
inline ECPoint add_unchecked(const ShortWeierstrass& E, const ECPoint& P, const ECPoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  QuadElem lambda;
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y.is_zero()) return ECPoint::identity();
    lambda = (QuadElem(3) * P.x * P.x + E.A) / (QuadElem(2) * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  QuadElem x3 = lambda * lambda - P.x - Q.x;
  QuadElem y3 = lambda * (P.x - x3) - P.y;
  return ECPoint::affine(std::move(x3), std::move(y3));
}
}  // namespace detail

inline ECPoint add(const ShortWeierstrass& E, const ECPoint& P, const ECPoint& Q) {
  detail::require_on_curve(E, P);
  detail::require_on_curve(E, Q);
  return detail::add_unchecked(E, P, Q);
}

/// Double-and-add; negative n multiplies -P.
inline ECPoint scalar_mul(const ShortWeierstrass& E, long n, const ECPoint& P) {
  detail::require_on_curve(E, P);
  ECPoint base = n < 0 ? neg(P) : P;
  unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  ECPoint acc = ECPoint::identity();
  while (m) {
    if (m & 1UL) acc = detail::add_unchecked(E, acc, base);
    base = detail::add_unchecked(E, base, base);
    m >>= 1;
  }
  return acc;
}

/// Smallest n <= bound with nP = O, if any.
inline std::optional<int> point_order(const ShortWeierstrass& E, const ECPoint& P, int bound = default_order_bound) {
  detail::require_on_curve(E, P);
  ECPoint Q = P;
  for (int n = 1; n <= bound; ++n) {
    if (Q.infinity) return n;
    Q = detail::add_unchecked(E, Q, P);
  }
  return std::nullopt;
}

/// f = (x^2 + u)^2 - 4v(x + w)
struct QuarticModel {
  QuadElem u;
  QuadElem v;
  QuadElem w;

  FieldTag field() const { return join(join(u.field(), v.field()), w.field()); }

  Poly f() const {
    const FieldTag F = field();
    Poly x = Poly::x(F);
    Poly sq = x * x + Poly::constant(u.in(F));
    return sq * sq - QuadElem(4) * v * (x + Poly::constant(w.in(F)));
  }

  friend bool operator==(const QuarticModel&, const QuarticModel&) = default;
};

/// x^4 - 6a x^2 - 8b x - 4A - 3a^2 for P = (a, b); defined for any affine P.
inline Poly quartic_from_point_raw(const ShortWeierstrass& E, const ECPoint& P) {
  if (P.infinity) throw error(errc::degenerate_parameters, "quartic model needs an affine point");
  detail::require_on_curve(E, P);
  const QuadElem& a = P.x;
  const QuadElem& b = P.y;
  return Poly({-QuadElem(4) * E.A - QuadElem(3) * a * a, QuadElem(-8) * b, QuadElem(-6) * a, QuadElem(0), QuadElem(1)},
              join(E.field(), a.field()));
}

inline QuarticModel quartic_from_point(const ShortWeierstrass& E, const ECPoint& P) {
  Poly raw = quartic_from_point_raw(E, P);
  if (P.y.is_zero()) throw error(errc::degenerate_parameters, "2-torsion point gives v = 0; use quartic_from_point_raw");
  const QuadElem& a = P.x;
  QuarticModel M{QuadElem(-3) * a, QuadElem(2) * P.y, (E.A + QuadElem(3) * a * a) / (QuadElem(2) * P.y)};
  if (M.f() != raw) throw error(errc::structural_violation, "(u,v,w) re-expansion differs from the raw quartic");
  return M;
}

enum class MapDirection { forward, backward };

/// The birational maps between E and y^2 = quartic_from_point_raw(E, P).
/// forward: (u, v) on E to (x, y) on the quartic; backward: the inverse.
inline ECPoint quartic_maps(const ShortWeierstrass& E, const ECPoint& P, MapDirection dir, const ECPoint& pt) {
  if (P.infinity) throw error(errc::degenerate_parameters, "quartic maps need an affine base point");
  const QuadElem& a = P.x;
  const QuadElem& b = P.y;
  if (pt.infinity) throw error(errc::pole, "maps are defined on affine points only");
  if (dir == MapDirection::forward) {
    detail::require_on_curve(E, pt);
    QuadElem den = pt.x - a;
    if (den.is_zero()) throw error(errc::pole, "forward map has a pole at u = a");
    QuadElem x = (pt.y + b) / den;
    return ECPoint::affine(x, QuadElem(2) * pt.x + a - x * x);
  }
  Poly f = quartic_from_point_raw(E, P);
  if (pt.y * pt.y != eval(f, pt.x)) throw error(errc::not_on_curve, pt.to_string() + " is not on y^2 = " + f.to_string());
  const QuadElem& x = pt.x;
  const QuadElem& y = pt.y;
  return ECPoint::affine((x * x + y - a) / QuadElem(2),
                         (x * x * x + x * y - QuadElem(3) * a * x - QuadElem(2) * b) / QuadElem(2));
}

struct Jacobian {
  ShortWeierstrass E;
  ECPoint P;
};

/// Inverts quartic_from_point: a = -u/3, b = v/2, A = vw - u^2/3, B = b^2 - a^3 - Aa.
inline Jacobian jacobian_of_quartic(const QuarticModel& M) {
  if (M.v.is_zero()) throw error(errc::degenerate_parameters, "v = 0 is outside the (u,v,w) shape");
  const Poly f = M.f();
  if (!is_squarefree(f)) throw error(errc::not_squarefree, f.to_string() + " is not square-free");
  QuadElem a = -M.u / QuadElem(3);
  QuadElem b = M.v / QuadElem(2);
  QuadElem A = M.v * M.w - M.u * M.u / QuadElem(3);
  QuadElem B = b * b - a * a * a - A * a;
  Jacobian J{{A, B}, ECPoint::affine(a, b)};
  if (J.E.discriminant().is_zero()) throw error(errc::singular_curve, "Jacobian of " + f.to_string() + " is singular");
  if (!on_curve(J.E, J.P)) throw error(errc::reconstruction_mismatch, "reconstructed point is off the Jacobian");
  if (quartic_from_point(J.E, J.P) != M) throw error(errc::reconstruction_mismatch, "quartic_from_point does not reproduce the model");
  return J;
}

/// Order of the divisor class of infinity^+ - infinity^- on y^2 = f(x).
inline std::optional<int> infinity_order(const QuarticModel& M, int bound = default_order_bound) {
  Jacobian J = jacobian_of_quartic(M);
  return point_order(J.E, J.P, bound);
}

}  // namespace pellfrac
