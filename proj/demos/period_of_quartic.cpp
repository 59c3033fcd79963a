// Expands sqrt(f) for a quartic f over Q and prints each partial quotient.
//
//   demo_period_of_quartic                 # the order-10 family at t = 2
//   demo_period_of_quartic 1 0 0 0 4       # x^4 + 4, highest degree first

#include <iostream>
#include <vector>

#include "pellfrac/cfrac.hpp"
#include "pellfrac/ecurve.hpp"

int main(int argc, char** argv) {
  using namespace pellfrac;
  std::vector<QuadElem> coeffs;
  if (argc == 6) {
    for (int i = 5; i >= 1; --i) coeffs.push_back(parse_quad(argv[i], FieldTag()));
  } else {
    coeffs = {QuadElem(parse_rational("1201/16")), QuadElem(-96), QuadElem(parse_rational("71/2")), QuadElem(0), QuadElem(1)};
  }
  const Poly f(coeffs);
  std::cout << "f = " << f.to_string() << "\n";

  const CFExpansion e = expand_sqrt(f);
  const int shown = e.period ? *e.period + *e.period_start : 8;
  for (const auto& st : e.steps) {
    if (st.h > shown) break;
    std::cout << "  a_" << st.h << " = " << st.a.to_string() << "\n";
  }
  if (!e.period) {
    std::cout << "no period within " << default_max_steps << " steps\n";
    return 2;
  }
  std::cout << "period " << *e.period << ", quasi-period " << *e.quasi_period << ", k = " << e.k->to_string() << "\n";

  // The (u, v, w) shape is recovered when the x^3 coefficient vanishes.
  if (f.coeff(3).is_zero() && !f.coeff(1).is_zero()) {
    QuadElem u = f.coeff(2) / QuadElem(2);
    QuadElem v = -f.coeff(1) / QuadElem(4);
    QuarticModel M{u, v, (u * u - f.coeff(0)) / (QuadElem(4) * v)};
    if (auto n = infinity_order(M)) std::cout << "infinity+ - infinity- has order " << *n << "\n";
  }
  return 0;
}
