#include <catch2/catch_amalgamated.hpp>

#include "tfg/measure.hpp"
#include "tfg/rng.hpp"

using namespace tfg;

namespace {
SystemPtr sturmian(long p, long q, long d, long r) {
  return SubshiftSystem::make_sturmian(QuadReal(Rational(p, r), Rational(q, r), d));
}
SystemPtr bundled_substitution() {
  Alphabet ab({"0", "1"});
  return SubshiftSystem::make_substitution(
      ab, {Word::parse(ab, "0011"), Word::parse(ab, "0101")});
}
}  // namespace

TEST_CASE("sturmian cylinder measures in Z + Z alpha") {
  auto sys = sturmian(-1, 1, 2, 1);
  QuadReal alpha = sys->sturmian_alpha();
  const Alphabet& ab = sys->alphabet();
  CHECK(measure(sys, ClopenSet::full_set(sys)) == QuadReal(1));
  CHECK(measure(sys, cylinder(sys, Word::parse(ab, "0"), 0)) == alpha);
  // n = 1 here: mu([011.]) = 1 - 2 alpha
  CHECK(measure(sys, cylinder(sys, Word::parse(ab, "011"), -2)) ==
        QuadReal(1) - QuadReal(2) * alpha);
  auto sys2 = sturmian(0, 1, 2, 5);
  QuadReal a2 = sys2->sturmian_alpha();
  // n = 2: mu([0111.]) = 1 - 3 alpha
  CHECK(measure(sys2, cylinder(sys2, Word::parse(ab, "0111"), -3)) ==
        QuadReal(1) - QuadReal(3) * a2);
}

TEST_CASE("measures are additive, consistent and shift invariant") {
  auto sys = sturmian(-1, 1, 2, 1);
  auto mo = measure_for(sys);
  for (int n = 1; n <= 10; ++n) {
    for (const Word& w : sys->words(n)) {
      QuadReal lhs = mo->word_measure(w);
      CHECK(lhs.sign() > 0);
      QuadReal rhs(0);
      for (Letter a : {Letter(0), Letter(1)}) {
        Word wa = w.append(a);
        if (sys->contains(wa)) rhs += mo->word_measure(wa);
      }
      CHECK(lhs == rhs);
      QuadReal lft(0);
      for (Letter a : {Letter(0), Letter(1)}) {
        Word aw = w.prepend(a);
        if (sys->contains(aw)) lft += mo->word_measure(aw);
      }
      CHECK(lhs == lft);
    }
  }
  ClopenSet A = cylinder(sys, Word::parse(sys->alphabet(), "01"), -1);
  for (long k = -5; k <= 5; ++k)
    CHECK(measure(sys, clopen_shift(A, k)) == measure(sys, A));
}

TEST_CASE("substitution block frequencies are exact dyadic rationals") {
  auto sys = bundled_substitution();
  auto mo = measure_for(sys);
  const Alphabet& ab = sys->alphabet();
  CHECK(mo->word_measure(Word::parse(ab, "0")) == QuadReal(Rational(1, 2)));
  CHECK(mo->word_measure(Word::parse(ab, "1")) == QuadReal(Rational(1, 2)));
  for (int n = 1; n <= 6; ++n) {
    QuadReal total(0);
    for (const Word& w : sys->words(n)) {
      QuadReal f = mo->word_measure(w);
      CHECK(f.is_rational());
      mpz_class den = f.rat().get_den();
      while (den % 2 == 0) den /= 2;
      CHECK(den == 1);
      total += f;
    }
    CHECK(total == QuadReal(1));
  }
  // consistency between levels
  for (const Word& w : sys->words(4)) {
    QuadReal rhs(0);
    for (Letter a : {Letter(0), Letter(1)}) {
      Word wa = w.append(a);
      if (sys->contains(wa)) rhs += mo->word_measure(wa);
    }
    CHECK(mo->word_measure(w) == rhs);
  }
}

TEST_CASE("index values of basic elements") {
  auto sys = sturmian(-1, 1, 2, 1);
  const Alphabet& ab = sys->alphabet();
  CHECK(index(FullGroupElement::shift_power(sys, 1)) == 1);
  CHECK(index(FullGroupElement::shift_power(sys, -4)) == -4);
  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  FullGroupElement s =
      FullGroupElement::from_pieces(sys, {{U, 1}, {clopen_shift(U, 1), -1}});
  CHECK(index(s) == 0);
}

TEST_CASE("index is a homomorphism on sampled pairs") {
  auto sys = sturmian(-1, 1, 2, 1);
  const Alphabet& ab = sys->alphabet();
  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  ClopenSet V = cylinder(sys, Word::parse(ab, "011"), -2);
  std::vector<FullGroupElement> pool = {
      FullGroupElement::shift_power(sys, 1),
      FullGroupElement::shift_power(sys, -1),
      FullGroupElement::from_pieces(sys, {{U, 1}, {clopen_shift(U, 1), -1}}),
      FullGroupElement::from_pieces(sys, {{V, 1}, {clopen_shift(V, 1), -1}})};
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto& a = pool[rng.below(pool.size())];
    const auto& b = pool[rng.below(pool.size())];
    CHECK(index(compose(a, b)) == index(a) + index(b));
  }
}

TEST_CASE("index vanishes on finite-order elements") {
  auto sys = sturmian(0, 1, 2, 5);
  const Alphabet& ab = sys->alphabet();
  for (const Word& w : sys->words(4)) {
    ClopenSet U = cylinder(sys, w, -1);
    if (!clopen_disjoint(U, clopen_shift(U, 1))) continue;
    FullGroupElement s =
        FullGroupElement::from_pieces(sys, {{U, 1}, {clopen_shift(U, 1), -1}});
    REQUIRE(order(s, 10) == 2);
    CHECK(index(s) == 0);
  }
}

TEST_CASE("unsupported and irrational measure requests are rejected") {
  Alphabet ab({"0", "1"});
  auto sft = SubshiftSystem::make_sft(ab, {Word::parse(ab, "11")});
  CHECK_THROWS_AS(measure_for(sft), Error);
  // cubic expansion factor: frequencies leave every quadratic field
  Alphabet ab3({"a", "b", "c"});
  auto cubic = SubshiftSystem::make_substitution(
      ab3, {Word::parse(ab3, "ab"), Word::parse(ab3, "c"), Word::parse(ab3, "a")});
  CHECK_THROWS_AS(measure_for(cubic)->word_measure(Word::parse(ab3, "a")), Error);
}
