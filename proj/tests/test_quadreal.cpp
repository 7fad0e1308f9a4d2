#include <catch2/catch_amalgamated.hpp>

#include "tfg/quadreal.hpp"

using namespace tfg;

TEST_CASE("rational-only values collapse to the trivial field") {
  QuadReal a(Rational(3, 4));
  CHECK(a.is_rational());
  CHECK(a.radicand() == 0);
  QuadReal b(Rational(1, 2), Rational(0), 7);
  CHECK(b.radicand() == 0);
  // d = 1 folds into the rational part
  QuadReal c(Rational(1), Rational(2), 1);
  CHECK(c.is_rational());
  CHECK(c.rat() == Rational(3));
}

TEST_CASE("arithmetic in Q(sqrt 2) is exact") {
  QuadReal r2(Rational(0), Rational(1), 2);
  CHECK((r2 * r2).rat() == Rational(2));
  QuadReal alpha = r2 - QuadReal(1);  // sqrt(2) - 1
  QuadReal beta = QuadReal(1) / (alpha + QuadReal(2));  // 1/(1+sqrt2) = sqrt2 - 1
  CHECK(beta == alpha);
  CHECK((alpha * (alpha + QuadReal(2))) == QuadReal(1));
}

TEST_CASE("comparisons decide sign exactly near ties") {
  QuadReal r2(Rational(0), Rational(1), 2);
  // 99/70 is slightly above sqrt(2), 140/99 slightly below... both very close
  CHECK(r2 < QuadReal(Rational(99, 70)));
  CHECK(QuadReal(Rational(140, 99)) < r2);
  CHECK(!(r2 < r2));
  CHECK(r2 <= r2);
}

TEST_CASE("floor and frac agree with the exact ordering") {
  QuadReal r2(Rational(0), Rational(1), 2);
  CHECK(r2.floor() == 1);
  CHECK((r2 * QuadReal(10)).floor() == 14);
  CHECK((-r2).floor() == -2);
  QuadReal f = (r2 * QuadReal(10)).frac();
  CHECK(QuadReal(0) <= f);
  CHECK(f < QuadReal(1));
  for (long k = -20; k <= 20; ++k) {
    QuadReal v = r2 * QuadReal(Rational(k)) + QuadReal(Rational(1, 3));
    long fl = v.floor();
    CHECK(QuadReal(Rational(fl)) <= v);
    CHECK(v < QuadReal(Rational(fl + 1)));
  }
}

TEST_CASE("invalid radicands and mixed fields are rejected") {
  CHECK_THROWS_AS(QuadReal(Rational(0), Rational(1), 8), Error);
  CHECK_THROWS_AS(QuadReal(Rational(0), Rational(1), 12), Error);
  QuadReal a(Rational(0), Rational(1), 2), b(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(a + b, Error);
}
