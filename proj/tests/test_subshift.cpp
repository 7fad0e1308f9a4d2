#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tfg/subshift.hpp"

using namespace tfg;

namespace {

SystemPtr sturmian_sqrt2m1() {
  return SubshiftSystem::make_sturmian(QuadReal(Rational(-1), Rational(1), 2));
}

SystemPtr bundled_substitution() {
  Alphabet ab({"0", "1"});
  return SubshiftSystem::make_substitution(
      ab, {Word::parse(ab, "0011"), Word::parse(ab, "0101")},
      {PointHandle::seed(1, 0, 1), PointHandle::address({{0, 1}})});
}

// independent oracle: factors of a long exact rotation coding
std::set<Word> rotation_factors(const SystemPtr& sys, int n, long window) {
  Word big = sys->point_coords(PointHandle::sturmian(QuadReal(0)), 0, window);
  std::set<Word> out;
  for (size_t i = 0; i + n <= big.size(); ++i) out.insert(big.sub(i, n));
  return out;
}

}  // namespace

TEST_CASE("sturmian length-1 words are both letters") {
  auto sys = sturmian_sqrt2m1();
  CHECK(sys->words(1).size() == 2);
}

TEST_CASE("substitution length-2 words stabilize to the full square") {
  auto sys = bundled_substitution();
  // oracle: factors of a deep image computed directly
  Word big = sys->iterate_substitution(0, 8);
  std::set<Word> expect;
  for (size_t i = 0; i + 2 <= big.size(); ++i) expect.insert(big.sub(i, 2));
  const auto& got = sys->words(2);
  CHECK(std::set<Word>(got.begin(), got.end()) == expect);
  CHECK(got.size() == 4);
}

TEST_CASE("sturmian factor counts match brute-force enumeration") {
  auto sys = sturmian_sqrt2m1();
  CHECK(sys->words(5).size() == 6);
  for (int n = 1; n <= 30; ++n) {
    INFO("n = " << n);
    auto brute = rotation_factors(sys, n, 4000);
    const auto& oracle = sys->words(n);
    CHECK(oracle.size() == (size_t)n + 1);
    CHECK(std::set<Word>(oracle.begin(), oracle.end()) == brute);
  }
}

TEST_CASE("language coherence under restriction and extension") {
  auto subst = bundled_substitution();
  auto sturm = sturmian_sqrt2m1();
  Alphabet sft_ab({"0", "1"});
  auto sft = SubshiftSystem::make_sft(sft_ab, {Word::parse(sft_ab, "11")});
  for (const auto& sys : {subst, sturm, sft}) {
    for (int n = 2; n <= 8; ++n) {
      const auto& ws = sys->words(n);
      for (const Word& w : ws) {
        CHECK(sys->contains(w.prefix(n - 1)));
        CHECK(sys->contains(w.suffix(n - 1)));
      }
      // every shorter word extends
      for (const Word& v : sys->words(n - 1)) {
        bool extends = false;
        for (const Word& w : ws)
          if (w.prefix(n - 1) == v || w.suffix(n - 1) == v) extends = true;
        CHECK(extends);
      }
    }
  }
}

TEST_CASE("golden mean shift counts follow the Fibonacci recursion") {
  Alphabet ab({"0", "1"});
  auto sys = SubshiftSystem::make_sft(ab, {Word::parse(ab, "11")});
  size_t prev = sys->words(1).size(), cur = sys->words(2).size();
  CHECK(prev == 2);
  CHECK(cur == 3);
  for (int n = 3; n <= 12; ++n) {
    size_t nxt = sys->words(n).size();
    CHECK(nxt == prev + cur);
    prev = cur;
    cur = nxt;
  }
}

TEST_CASE("degenerate systems are rejected") {
  Alphabet ab({"0", "1"});
  // non-primitive substitution
  CHECK_THROWS_AS(SubshiftSystem::make_substitution(
                      ab, {Word::parse(ab, "00"), Word::parse(ab, "11")}),
                  Error);
  // rational rotation number
  CHECK_THROWS_AS(SubshiftSystem::make_sturmian(QuadReal(Rational(1, 3))), Error);
  // empty shift of finite type
  CHECK_THROWS_AS(
      SubshiftSystem::make_sft(ab, {Word::parse(ab, "0"), Word::parse(ab, "1")}), Error);
}

TEST_CASE("point coordinates agree with hand-evaluated codings") {
  auto sturm = sturmian_sqrt2m1();
  PointHandle origin = PointHandle::sturmian(QuadReal(0));
  CHECK(sturm->point_coords(origin, 0, 3).str(sturm->alphabet()) == "0110");
  CHECK(sturm->point_coords(origin, 2, 2).str(sturm->alphabet()) == "1");

  auto subst = bundled_substitution();
  const auto& pts = subst->distinguished_points();
  CHECK(subst->point_coords(pts[0], 0, 3).str(subst->alphabet()) == "0011");
  // the address point sits one step inside its level-1 block
  CHECK(subst->point_coords(pts[1], -1, 2).str(subst->alphabet()) == "0011");
}

TEST_CASE("point windows always lie in the language") {
  auto sturm = sturmian_sqrt2m1();
  auto subst = bundled_substitution();
  for (long a = -9; a <= 5; a += 2) {
    CHECK(sturm->contains(
        sturm->point_coords(PointHandle::sturmian(QuadReal(Rational(1, 7))), a, a + 8)));
    for (const auto& p : subst->distinguished_points())
      CHECK(subst->contains(subst->point_coords(p, a, a + 8)));
  }
}

TEST_CASE("seed validation rejects letters that are not fixed") {
  Alphabet ab({"0", "1"});
  CHECK_THROWS_AS(
      SubshiftSystem::make_substitution(ab,
                                        {Word::parse(ab, "0011"), Word::parse(ab, "0101")},
                                        {PointHandle::seed(0, 0, 1)}),
      Error);  // sigma(0) ends in 1, so 0 is not a legal left seed
}
