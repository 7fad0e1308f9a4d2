#include <catch2/catch_amalgamated.hpp>

#include "tfg/expr.hpp"

using namespace tfg;

namespace {
SystemPtr sturmian() {
  return SubshiftSystem::make_sturmian(QuadReal(Rational(-1), Rational(1), 2));
}
}  // namespace

TEST_CASE("cylinder literals follow the dot convention") {
  auto sys = sturmian();
  ExprParser p(sys);
  ClopenSet U = p.parse_clopen("[0.]");
  CHECK(U.offset() == 0);
  CHECK(U.len() == 1);
  ClopenSet V = p.parse_clopen("[011.]");
  CHECK(V.offset() == -2);
  ClopenSet W = p.parse_clopen("[01.0]");
  CHECK(W.offset() == -1);
  CHECK(W.len() == 3);
  CHECK(p.parse_clopen("[.1]").offset() == 1);
  CHECK(p.parse_clopen("[00.]").is_empty());  // not in the language
}

TEST_CASE("set operators and shifts") {
  auto sys = sturmian();
  ExprParser p(sys);
  CHECK(clopen_equal(p.parse_clopen("[0.] | ~[0.]"), ClopenSet::full_set(sys)));
  CHECK(p.parse_clopen("[0.] & ~[0.]").is_empty());
  CHECK(clopen_equal(p.parse_clopen("shift([0.], 1)"),
                     clopen_shift(p.parse_clopen("[0.]"), 1)));
  CHECK(clopen_equal(p.parse_clopen("X & [0.]"), p.parse_clopen("[0.]")));
  CHECK(p.parse_clopen("O").is_empty());
}

TEST_CASE("element expressions build the named constructions") {
  auto sys = sturmian();
  ExprParser p(sys);
  CHECK(equal(p.parse_element("phi"), FullGroupElement::shift_power(sys, 1)));
  CHECK(equal(p.parse_element("phi^-3"), FullGroupElement::shift_power(sys, -3)));
  CHECK(p.parse_element("phi phi^-1").is_identity());
  CHECK(p.parse_element("id").is_identity());
  FullGroupElement s = p.parse_element("sigmaU([0.])");
  CHECK(order(s, 10) == 2);
  CHECK(equal(p.parse_element("sigmaU([0.])^2"), FullGroupElement::identity(sys)));
  CHECK(equal(p.parse_element("gammaU([011.])"),
              gamma_u(sys, cylinder(sys, Word::parse(sys->alphabet(), "011"), -2))));
  CHECK(equal(p.parse_element("phiU(X)"), FullGroupElement::shift_power(sys, 1)));
  // commutator bracket
  CHECK(p.parse_element("[phi, phi^5]").is_identity());
  FullGroupElement c = p.parse_element("[sigmaU([0.]), phi sigmaU([0.]) phi^-1]");
  CHECK(equal(c, commutator(s, conjugate(FullGroupElement::shift_power(sys, 1), s))));
}

TEST_CASE("parse errors carry positions") {
  auto sys = sturmian();
  ExprParser p(sys);
  CHECK_THROWS_AS(p.parse_element("frobnicate([0.])"), Error);
  CHECK_THROWS_AS(p.parse_element("phi^"), Error);
  CHECK_THROWS_AS(p.parse_element("(phi"), Error);
  CHECK_THROWS_AS(p.parse_clopen("[01]"), Error);    // no dot
  CHECK_THROWS_AS(p.parse_clopen("[0.1.]"), Error);  // two dots
  CHECK_THROWS_AS(p.parse_element("phi )"), Error);  // trailing junk
}
