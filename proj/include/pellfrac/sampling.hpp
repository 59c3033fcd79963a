#pragma once

// Seeded sampling of admissible family parameters.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "pellfrac/families.hpp"

namespace pellfrac {

/// Square-free part of num*den for a nonzero rational, as a field tag. Returns
/// nothing when the product does not fit the field tag's integer range.
inline std::optional<FieldTag> field_of_sqrt(const Rational& q) {
  if (sgn(q) == 0) return std::nullopt;
  Integer m = q.get_num() * q.get_den();
  if (!m.fits_slong_p() || abs(m) > Integer("1000000000000")) return std::nullopt;
  return FieldTag::of(m.get_si());
}

/// Rationals of height <= H other than 0, shuffled deterministically by seed.
inline std::vector<Rational> shuffled_rationals(unsigned H, std::uint64_t seed) {
  std::vector<Rational> pool;
  for (const auto& q : rationals_of_height(H))
    if (sgn(q) != 0) pool.push_back(q);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  return pool;
}

/// Up to `count` family specs with rational t of height <= H. For tags on a
/// modular curve, s is taken from the field Q(sqrt disc) generated by the
/// curve's discriminant at t. Specs whose model cannot be built are skipped.
inline std::vector<FamilySpec> sample_family_specs(FamilyTag tag, std::size_t count, std::uint64_t seed, unsigned H = 6) {
  std::vector<FamilySpec> out;
  const auto curve = info(tag).curve;
  for (const Rational& q : shuffled_rationals(H, seed)) {
    if (out.size() >= count) break;
    FamilySpec spec{tag, QuadElem(q), QuadElem()};
    if (curve) {
      const auto& c = detail::curve_data(*curve);
      QuadElem p = eval(c.p, spec.t);
      QuadElem disc = p * p + QuadElem(4) * eval(c.h, spec.t);
      auto field = field_of_sqrt(disc.a());
      if (!field) continue;
      auto s = principal_s(*curve, spec.t, *field);
      if (!s) continue;
      spec.s = *s;
    }
    try {
      (void)family_quartic(spec);
    } catch (const error&) {
      continue;
    }
    out.push_back(spec);
  }
  return out;
}

}  // namespace pellfrac
