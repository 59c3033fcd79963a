// Searches small quadratic fields for points on X1(14) and reports whether the
// odd period 13 is realized by some mu*sqrt(f) at each point.

#include <iostream>

#include "pellfrac/families.hpp"

int main() {
  using namespace pellfrac;
  const unsigned height = 4;
  for (std::int64_t d : {-7, -3, 2, 5, 33}) {
    const FieldTag field = FieldTag::of(d);
    int found = 0;
    for (const auto& p : solve_points(ModCurveId::X1_14, field, height)) {
      if (p.cusp || !p.admissible) continue;
      ++found;
      const auto cert = odd_period_certificate(13, p);
      std::cout << field.name() << "  t = " << p.t.to_string() << "  s = " << p.s.to_string() << "\n"
                << "    period of sqrt(f): " << cert.period << ", k = " << cert.k.to_string() << "\n"
                << "    alpha13 = " << cert.alpha.to_string() << "\n"
                << "    " << (cert.mu ? "period 13 with mu = " + cert.mu->to_string() : std::string("k is not a square: no mu gives period 13")) << "\n";
    }
    if (!found) std::cout << field.name() << "  no admissible points of height <= " << height << "\n";
  }
  return 0;
}
