#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "pellfrac/errors.hpp"

namespace pellfrac {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw error(errc::division_by_zero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" (optional sign, surrounding whitespace ignored).
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto valid_int = [](std::string_view v, bool allow_sign) {
    if (!v.empty() && allow_sign && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char ch : v)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw error(errc::parse_error, "malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Height of p/q in lowest terms: max(|p|, q).
inline Integer height(const Rational& q) {
  Integer p = abs(q.get_num());
  return p > q.get_den() ? p : Integer(q.get_den());
}

/// Non-negative rational square root, or nullopt when q is not a square in Q.
inline std::optional<Rational> rat_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  return make_rational(n, d);
}

}  // namespace pellfrac
