#pragma once

// Exact arithmetic in quadratic number fields Q(sqrt d).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pellfrac/errors.hpp"
#include "pellfrac/rational.hpp"

namespace pellfrac {

class FieldTag;

struct CanonicalField;

CanonicalField canonical_field(std::int64_t d);

/// Q(sqrt d) with d square-free; d == 1 stands for Q itself.
class FieldTag {
 public:
  /// The rational field.
  constexpr FieldTag() = default;

  /// Normalizes d to its square-free kernel; throws invalid_field for d == 0.
  static FieldTag of(std::int64_t d);

  static constexpr FieldTag rationals() { return FieldTag(); }

  constexpr std::int64_t d() const { return d_; }
  constexpr bool is_rational() const { return d_ == 1; }

  friend constexpr bool operator==(FieldTag, FieldTag) = default;
  friend constexpr auto operator<=>(FieldTag, FieldTag) = default;

  std::string name() const {
    return is_rational() ? std::string("Q") : "Q(sqrt(" + std::to_string(d_) + "))";
  }

 private:
  friend CanonicalField canonical_field(std::int64_t d);
  constexpr explicit FieldTag(std::int64_t d, int) : d_(d) {}
  std::int64_t d_ = 1;
};

struct CanonicalField {
  FieldTag field;
  /// d = square_factor * field.d()
  std::int64_t square_factor;
};

inline CanonicalField canonical_field(std::int64_t d) {
  if (d == 0) throw error(errc::invalid_field, "d must be nonzero");
  std::int64_t sign = d < 0 ? -1 : 1;
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  std::uint64_t kernel = 1, square = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) square *= p * p;
    if (e % 2) kernel *= p;
  }
  kernel *= m;
  return {FieldTag(sign * static_cast<std::int64_t>(kernel), 0), static_cast<std::int64_t>(square)};
}

inline FieldTag FieldTag::of(std::int64_t d) { return canonical_field(d).field; }

/// The smallest field containing both; rationals embed everywhere.
inline FieldTag join(FieldTag x, FieldTag y) {
  if (x == y || y.is_rational()) return x;
  if (x.is_rational()) return y;
  throw error(errc::field_mismatch, x.name() + " vs " + y.name());
}

/// a + b*sqrt(d), kept canonical: b == 0 whenever the field is Q.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadElem(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadElem(Rational a, FieldTag field) : a_(std::move(a)), field_(field) {}
  QuadElem(Rational a, Rational b, FieldTag field) : a_(std::move(a)), b_(std::move(b)), field_(field) {
    if (field_.is_rational() && sgn(b_) != 0)
      throw error(errc::invalid_field, "irrational part in Q");
  }

  /// sqrt(d) itself.
  static QuadElem root(FieldTag field) {
    if (field.is_rational()) return QuadElem(1);
    return QuadElem(0, 1, field);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  FieldTag field() const { return field_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Same value viewed in a (compatible) larger field.
  QuadElem in(FieldTag field) const { return QuadElem(a_, b_, join(field_, field)); }

  QuadElem conj() const { return QuadElem(a_, -b_, field_); }
  Rational norm() const { return a_ * a_ - Rational(field_.d()) * b_ * b_; }
  Rational trace() const { return 2 * a_; }

  QuadElem operator-() const { return QuadElem(-a_, -b_, field_); }

  QuadElem& operator+=(const QuadElem& o) {
    field_ = join(field_, o.field_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadElem& operator-=(const QuadElem& o) {
    field_ = join(field_, o.field_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadElem& operator*=(const QuadElem& o) {
    field_ = join(field_, o.field_);
    Rational na = a_ * o.a_ + Rational(field_.d()) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

  QuadElem inverse() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
    Rational n = norm();
    return QuadElem(a_ / n, -b_ / n, field_);
  }

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

  /// Value equality; a rational compares equal to the same rational in any field.
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.field_ == y.field_ || sgn(x.b_) == 0;
  }

  std::string to_string() const {
    if (is_rational()) return a_.get_str();
    std::string out;
    if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    Rational mag = b_;
    if (mag == 1) {
    } else if (mag == -1) {
      out += "-";
    } else {
      out += mag.get_str() + "*";
    }
    return out + "sqrt(" + std::to_string(field_.d()) + ")";
  }

 private:
  Rational a_;
  Rational b_;
  FieldTag field_;
};

inline QuadElem pow(QuadElem base, unsigned e) {
  QuadElem acc(1);
  acc = acc.in(base.field());
  while (e) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return acc;
}

/// Total order: first by a, then by b. Used for deterministic output only.
inline std::strong_ordering lex_compare(const QuadElem& x, const QuadElem& y) {
  int ca = cmp(x.a(), y.a());
  if (ca != 0) return ca < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int cb = cmp(x.b(), y.b());
  if (cb != 0) return cb < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

struct LexLess {
  bool operator()(const QuadElem& x, const QuadElem& y) const { return lex_compare(x, y) < 0; }
};

struct ConjNorm {
  QuadElem conj;
  Rational norm;
};

inline ConjNorm conj_norm(const QuadElem& z) { return {z.conj(), z.norm()}; }

/// Largest of the absolute numerators/denominators of a and b.
inline Integer height(const QuadElem& z) {
  Integer ha = height(z.a());
  Integer hb = z.field().is_rational() ? Integer(0) : height(z.b());
  return ha > hb ? ha : hb;
}

namespace detail {

inline QuadElem canonical_sign(QuadElem r) {
  int s = sgn(r.a()) != 0 ? sgn(r.a()) : sgn(r.b());
  return s < 0 ? -r : r;
}

}  // namespace detail

/// Square root in K with first nonzero coordinate positive, or nullopt when z
/// is not a square in its field.
inline std::optional<QuadElem> qf_sqrt(const QuadElem& z) {
  const FieldTag field = z.field();
  if (z.is_zero()) return QuadElem(0, field);
  if (field.is_rational()) {
    auto r = rat_sqrt(z.a());
    if (!r) return std::nullopt;
    return QuadElem(*r);
  }
  // (x + y sqrt d)^2 = z  =>  norm(z) = (x^2 - d y^2)^2 and x^2 = (a +- n)/2.
  auto n = rat_sqrt(z.norm());
  if (!n) return std::nullopt;
  const Rational d(field.d());
  for (const Rational& x2 : {Rational((z.a() + *n) / 2), Rational((z.a() - *n) / 2)}) {
    auto x = rat_sqrt(x2);
    if (!x) continue;
    if (sgn(*x) != 0) {
      Rational y = z.b() / (2 * *x);
      QuadElem cand(*x, y, field);
      if (cand * cand == z) return detail::canonical_sign(cand);
    } else if (sgn(z.b()) == 0) {
      auto y = rat_sqrt(z.a() / d);
      if (y) {
        QuadElem cand(0, *y, field);
        if (cand * cand == z) return detail::canonical_sign(cand);
      }
    }
  }
  return std::nullopt;
}

inline bool is_square(const QuadElem& z) { return qf_sqrt(z).has_value(); }

/// Rationals p/q in lowest terms with |p| <= H and q <= H, ordered by height
/// and then by value.
inline std::vector<Rational> rationals_of_height(unsigned H) {
  std::vector<Rational> out;
  out.emplace_back(0);
  for (unsigned q = 1; q <= H; ++q)
    for (unsigned p = 1; p <= H; ++p) {
      if (std::gcd(p, q) != 1) continue;
      out.push_back(make_rational(Integer(p), Integer(q)));
      out.push_back(make_rational(-Integer(p), Integer(q)));
    }
  std::stable_sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) {
    Integer hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

/// Every a + b sqrt(d) whose coordinates have height <= H, each exactly once,
/// ordered by height, then a, then b.
inline std::vector<QuadElem> enumerate_elements(FieldTag field, unsigned H) {
  if (H < 1) return {};
  const auto rats = rationals_of_height(H);
  std::vector<QuadElem> out;
  if (field.is_rational()) {
    out.reserve(rats.size());
    for (const auto& r : rats) out.emplace_back(r);
    return out;
  }
  out.reserve(rats.size() * rats.size());
  for (const auto& a : rats)
    for (const auto& b : rats) out.emplace_back(a, b, field);
  std::stable_sort(out.begin(), out.end(), [](const QuadElem& x, const QuadElem& y) {
    Integer hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return lex_compare(x, y) < 0;
  });
  return out;
}

namespace detail {

inline void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

inline std::string take_digits(std::string_view& s) {
  std::string out;
  while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
    out.push_back(s.front());
    s.remove_prefix(1);
  }
  return out;
}

}  // namespace detail

/// Parses sums of terms "p/q" and "p/q*sqrt(m)" / "sqrt(m)/q", e.g.
/// "1/2+3/4*sqrt(17)" or "-sqrt(2)". sqrt(m) must canonicalize to `field`
/// (sqrt(12) is read as 2*sqrt(3)).
inline QuadElem parse_quad(std::string_view text, FieldTag field) {
  std::string_view s = text;
  auto fail = [&](const std::string& why) {
    return error(errc::parse_error, "'" + std::string(text) + "': " + why);
  };
  QuadElem acc(0, field);
  detail::skip_ws(s);
  if (s.empty()) throw fail("empty element");
  bool first = true;
  while (true) {
    detail::skip_ws(s);
    if (s.empty()) break;
    int sign = 1;
    if (s.front() == '+' || s.front() == '-') {
      if (s.front() == '-') sign = -1;
      s.remove_prefix(1);
      detail::skip_ws(s);
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
      std::string num = detail::take_digits(s);
      detail::skip_ws(s);
      std::string den = "1";
      if (!s.empty() && s.front() == '/') {
        s.remove_prefix(1);
        detail::skip_ws(s);
        den = detail::take_digits(s);
        if (den.empty()) throw fail("missing denominator");
      }
      coef = make_rational(Integer(num), Integer(den));
      have_coef = true;
      detail::skip_ws(s);
      if (!s.empty() && s.front() == '*') {
        s.remove_prefix(1);
        detail::skip_ws(s);
      } else {
        acc += QuadElem(sign * coef, field);
        continue;
      }
    }
    if (s.substr(0, 5) != "sqrt(") throw fail(have_coef ? "expected sqrt(...)" : "expected a number");
    s.remove_prefix(5);
    detail::skip_ws(s);
    int msign = 1;
    if (!s.empty() && s.front() == '-') {
      msign = -1;
      s.remove_prefix(1);
    }
    std::string m = detail::take_digits(s);
    detail::skip_ws(s);
    if (m.empty() || s.empty() || s.front() != ')') throw fail("malformed sqrt(...)");
    s.remove_prefix(1);
    auto cf = canonical_field(msign * std::stoll(m));
    if (cf.field != field) throw fail("sqrt(" + std::string(msign < 0 ? "-" : "") + m + ") is not in " + field.name());
    auto outside = rat_sqrt(Rational(cf.square_factor));
    Rational scale = *outside;
    detail::skip_ws(s);
    if (!s.empty() && s.front() == '/') {
      s.remove_prefix(1);
      detail::skip_ws(s);
      std::string den = detail::take_digits(s);
      if (den.empty()) throw fail("missing denominator");
      scale /= Rational(Integer(den));
    }
    Rational part = sign * coef * scale;
    if (cf.field.is_rational())
      acc += QuadElem(part, field);
    else
      acc += QuadElem(0, part, field);
  }
  return acc;
}

}  // namespace pellfrac
