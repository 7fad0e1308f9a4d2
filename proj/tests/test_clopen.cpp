#include <catch2/catch_amalgamated.hpp>

#include "tfg/clopen.hpp"

using namespace tfg;

namespace {
SystemPtr sturmian() {
  return SubshiftSystem::make_sturmian(QuadReal(Rational(-1), Rational(1), 2));
}
}  // namespace

TEST_CASE("cylinders of words outside the language are empty") {
  auto sys = sturmian();
  CHECK(!cylinder(sys, Word::parse(sys->alphabet(), "0"), 0).is_empty());
  CHECK(cylinder(sys, Word::parse(sys->alphabet(), "00"), 0).is_empty());
}

TEST_CASE("boolean algebra laws hold on canonical forms") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  ClopenSet V = cylinder(sys, Word::parse(ab, "011"), -2);
  ClopenSet W = cylinder(sys, Word::parse(ab, "10"), 1);
  CHECK(clopen_equal(clopen_union(U, V), clopen_union(V, U)));
  CHECK(clopen_equal(clopen_intersect(U, V), clopen_intersect(V, U)));
  CHECK(clopen_equal(clopen_union(U, clopen_union(V, W)),
                     clopen_union(clopen_union(U, V), W)));
  CHECK(clopen_equal(clopen_union(U, U), U));
  CHECK(clopen_equal(clopen_intersect(U, U), U));
  CHECK(clopen_intersect(U, clopen_complement(U)).is_empty());
  CHECK(clopen_equal(clopen_union(U, clopen_complement(U)), ClopenSet::full_set(sys)));
}

TEST_CASE("refinement to a larger window is lossless") {
  auto sys = sturmian();
  ClopenSet U = cylinder(sys, Word::parse(sys->alphabet(), "0"), 0);
  ClopenSet R = U.refined(-4, 5);
  CHECK(R.offset() == -4);
  CHECK(clopen_equal(U, R));
  CHECK(clopen_equal(R.reduced(), U));
}

TEST_CASE("shifts move windows and respect disjointness facts") {
  auto sys = sturmian();
  ClopenSet U = cylinder(sys, Word::parse(sys->alphabet(), "0"), 0);
  ClopenSet S = clopen_shift(U, 1);
  CHECK(S.len() == 1);  // shift of a cylinder is a cylinder
  CHECK(S.offset() == -1);
  // alpha < 1/2: U and phi(U) are disjoint
  CHECK(clopen_disjoint(U, S));
  CHECK(clopen_equal(clopen_shift(S, -1), U));
}

TEST_CASE("substitution cylinders of admissible words are nonempty") {
  Alphabet ab({"0", "1"});
  auto sys = SubshiftSystem::make_substitution(
      ab, {Word::parse(ab, "0011"), Word::parse(ab, "0101")});
  CHECK(!cylinder(sys, Word::parse(ab, "00"), 0).is_empty());
}

TEST_CASE("point membership matches window evaluation") {
  auto sys = sturmian();
  PointHandle p = PointHandle::sturmian(QuadReal(0));
  ClopenSet U = cylinder(sys, Word::parse(sys->alphabet(), "0"), 0);
  CHECK(U.contains_point(p, 0));       // coding of 0 starts with 0
  CHECK(!U.contains_point(p, 1));      // next letter is 1
  ClopenSet C = clopen_complement(U);
  for (long j = -6; j <= 6; ++j) CHECK(U.contains_point(p, j) != C.contains_point(p, j));
}

TEST_CASE("subset and equality survive mixed windows") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  // the letter after a marker is forced, so [0.] = [01.] as sets
  CHECK(clopen_equal(U, cylinder(sys, Word::parse(ab, "01"), 0)));
  ClopenSet UV = cylinder(sys, Word::parse(ab, "010"), 0);
  CHECK(clopen_subset(UV, U));
  CHECK(!clopen_subset(U, UV));
  CHECK(!clopen_equal(UV, U));
}
