// A small tour: build a sturmian system, construct a few elements, and
// compute measures, indices and signatures exactly.

#include <iostream>

#include "tfg/expr.hpp"
#include "tfg/generators.hpp"

int main() {
  using namespace tfg;
  // rotation number sqrt(2) - 1
  auto sys = SubshiftSystem::make_sturmian(QuadReal(Rational(-1), Rational(1), 2));
  const Alphabet& ab = sys->alphabet();

  std::cout << "factor counts:";
  for (int n = 1; n <= 8; ++n) std::cout << " " << sys->words(n).size();
  std::cout << "\n";

  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  std::cout << "mu([0.])  = " << measure(sys, U).str() << "\n";

  ExprParser parser(sys);
  FullGroupElement s = parser.parse_element("sigmaU([0.])");
  FullGroupElement r = parser.parse_element("phiU([0.])");
  std::cout << "order(sigmaU) = " << order(s, 16).value_or(-1) << "\n";
  std::cout << "index(phiU)   = " << index(r) << "\n";

  K0Presentation pres(sys);
  std::cout << "sgn(sigmaU)   = " << sgn(s, pres).str() << "  (basis [1_X],[1_U] mod 2)\n";

  FullGroupElement w = parser.parse_element("phiU([0.]) phiU([011.])^-1");
  std::cout << "sgn(phiU phiV^-1) = " << sgn(w, pres).str() << "\n";
  return 0;
}
