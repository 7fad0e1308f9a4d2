#include <catch2/catch_amalgamated.hpp>

#include "tfg/period.hpp"
#include "tfg/rng.hpp"

using namespace tfg;

namespace {

SystemPtr sturmian() {
  return SubshiftSystem::make_sturmian(QuadReal(Rational(-1), Rational(1), 2));
}

FullGroupElement sigma_of(const SystemPtr& sys, const ClopenSet& U) {
  return FullGroupElement::from_pieces(sys, {{U, 1}, {clopen_shift(U, 1), -1}});
}

}  // namespace

TEST_CASE("constant codes give shift powers") {
  auto sys = sturmian();
  FullGroupElement id = FullGroupElement::identity(sys);
  FullGroupElement phi = FullGroupElement::shift_power(sys, 1);
  CHECK(id.is_identity());
  CHECK(equal(compose(phi, inverse(phi)), id));
  CHECK(equal(compose(power(phi, 3), power(phi, -2)), phi));
  CHECK(phi.cocycle(Word::parse(sys->alphabet(), "0"), 0) == 1);
}

TEST_CASE("from_code validates totality and bijectivity") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  // the involution swapping [0.] and phi([0.]) is accepted
  std::map<Word, int> good = {{Word::parse(ab, "01"), -1},
                              {Word::parse(ab, "10"), 1},
                              {Word::parse(ab, "11"), 0}};
  FullGroupElement s = FullGroupElement::from_code(sys, 1, 0, good);
  CHECK(order(s, 10) == 2);
  // a non-injective code: shift only on [0.]
  std::map<Word, int> bad = {{Word::parse(ab, "0"), 1}, {Word::parse(ab, "1"), 0}};
  CHECK_THROWS_AS(FullGroupElement::from_code(sys, 0, 0, bad), Error);
  // missing a word
  std::map<Word, int> partial = {{Word::parse(ab, "0"), 0}};
  CHECK_THROWS_AS(FullGroupElement::from_code(sys, 0, 0, partial), Error);
  // keyed outside the language
  std::map<Word, int> extra = {{Word::parse(ab, "00"), 0},
                               {Word::parse(ab, "01"), 0},
                               {Word::parse(ab, "10"), 0},
                               {Word::parse(ab, "11"), 0}};
  CHECK_THROWS_AS(FullGroupElement::from_code(sys, 1, 0, extra), Error);
}

TEST_CASE("group laws hold exactly on generated elements") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  ClopenSet V = cylinder(sys, Word::parse(ab, "011"), -2);
  std::vector<FullGroupElement> pool = {
      FullGroupElement::shift_power(sys, 1), sigma_of(sys, U), sigma_of(sys, V),
      FullGroupElement::shift_power(sys, -2)};
  Rng rng(7);
  FullGroupElement id = FullGroupElement::identity(sys);
  for (int t = 0; t < 25; ++t) {
    const auto& a = pool[rng.below(pool.size())];
    const auto& b = pool[rng.below(pool.size())];
    const auto& c = pool[rng.below(pool.size())];
    CHECK(equal(compose(compose(a, b), c), compose(a, compose(b, c))));
    CHECK(equal(compose(a, id), a));
    CHECK(equal(compose(id, a), a));
    CHECK(equal(compose(a, inverse(a)), id));
    CHECK(fixed_set(compose(a, inverse(a))).is_full());
  }
}

TEST_CASE("cocycle of a product satisfies the chain rule") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  FullGroupElement g = sigma_of(sys, cylinder(sys, Word::parse(ab, "0"), 0));
  FullGroupElement h = compose(FullGroupElement::shift_power(sys, 1),
                               sigma_of(sys, cylinder(sys, Word::parse(ab, "011"), -2)));
  FullGroupElement gh = compose(g, h);
  int L = gh.left_radius() + g.max_shift() + h.max_shift() + g.left_radius();
  int R = gh.right_radius() + g.max_shift() + h.max_shift() + g.right_radius();
  for (const Word& w : sys->words(L + R + 1)) {
    int nh = h.cocycle(w, -L);
    int ng = g.cocycle(w.sub((size_t)(L - g.left_radius() + nh), g.window_len()), -g.left_radius());
    CHECK(gh.cocycle(w, -L) == ng + nh);
  }
}

TEST_CASE("orders of the named shapes") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  FullGroupElement s = sigma_of(sys, cylinder(sys, Word::parse(ab, "0"), 0));
  CHECK(order(s, 720) == 2);
  CHECK(equal(inverse(s), s));
  CHECK(!order(FullGroupElement::shift_power(sys, 1), 200).has_value());
}

TEST_CASE("fixed sets and the canonical window") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  FullGroupElement id = FullGroupElement::identity(sys);
  CHECK(fixed_set(id).is_full());
  CHECK(fixed_set(FullGroupElement::shift_power(sys, 1)).is_empty());
  FullGroupElement s = sigma_of(sys, cylinder(sys, Word::parse(ab, "0"), 0));
  ClopenSet expect = clopen_complement(
      clopen_union(cylinder(sys, Word::parse(ab, "0"), 0),
                   clopen_shift(cylinder(sys, Word::parse(ab, "0"), 0), 1)));
  CHECK(clopen_equal(fixed_set(s), expect));
  // canonical windows are minimal: rebuilding from a refined code is a no-op
  std::map<Word, int> refined;
  for (const Word& w : sys->words(7)) refined[w] = s.cocycle(w, -3);
  FullGroupElement s2 = FullGroupElement::from_code(sys, 3, 3, refined);
  CHECK(s2.left_radius() == s.left_radius());
  CHECK(s2.right_radius() == s.right_radius());
  CHECK(equal(s, s2));
}

TEST_CASE("images of clopen sets under elements") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  FullGroupElement phi = FullGroupElement::shift_power(sys, 1);
  CHECK(clopen_equal(image(phi, U), clopen_shift(U, 1)));
  FullGroupElement s = sigma_of(sys, U);
  CHECK(clopen_equal(image(s, U), clopen_shift(U, 1)));
  CHECK(clopen_equal(image(s, clopen_shift(U, 1)), U));
  CHECK(clopen_equal(preimage(s, U), clopen_shift(U, 1)));
  ClopenSet F = fixed_set(s);
  CHECK(clopen_equal(image(s, F), F));
}

TEST_CASE("cocycle lookup needs a covering word") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  FullGroupElement s = sigma_of(sys, cylinder(sys, Word::parse(ab, "0"), 0));
  CHECK_THROWS_AS(s.cocycle(Word::parse(ab, "0"), 0), Error);
  CHECK(s.cocycle(Word::parse(ab, "10"), -1) == 1);  // word "10" on [-1,0]: in U
  CHECK(s.cocycle(Word::parse(ab, "01"), -1) == -1);
}

TEST_CASE("period decomposition splits by least period") {
  auto sys = sturmian();
  const Alphabet& ab = sys->alphabet();
  // identity: one part, the whole space
  PeriodDecomposition pid = period_decomposition(FullGroupElement::identity(sys));
  REQUIRE(pid.parts.size() == 1);
  CHECK(pid.parts[0].period == 1);
  CHECK(pid.parts[0].transversal.is_full());

  ClopenSet U = cylinder(sys, Word::parse(ab, "0"), 0);
  FullGroupElement s = sigma_of(sys, U);
  PeriodDecomposition pd = period_decomposition(s);
  REQUIRE(pd.parts.size() == 2);
  CHECK(pd.parts[0].period == 1);
  CHECK(clopen_equal(pd.parts[0].transversal, fixed_set(s)));
  CHECK(pd.parts[1].period == 2);
  const ClopenSet& V2 = pd.parts[1].transversal;
  ClopenSet both = clopen_union(U, clopen_shift(U, 1));
  CHECK(clopen_disjoint(V2, image(s, V2)));
  CHECK(clopen_equal(clopen_union(V2, image(s, V2)), both));

  // an order-3 cycle: gamma over the cylinder [011.]
  ClopenSet W = cylinder(sys, Word::parse(ab, "011"), -2);
  FullGroupElement g = FullGroupElement::from_pieces(
      sys, {{clopen_shift(W, -1), 1}, {W, 1}, {clopen_shift(W, 1), -2}});
  CHECK(order(g, 10) == 3);
  PeriodDecomposition pg = period_decomposition(g);
  REQUIRE(pg.parts.size() == 2);
  CHECK(pg.parts[1].period == 3);
  ClopenSet orbit = clopen_union(clopen_union(clopen_shift(W, -1), W), clopen_shift(W, 1));
  ClopenSet acc = pg.parts[1].transversal;
  acc = clopen_union(acc, image(g, pg.parts[1].transversal));
  acc = clopen_union(acc, image(compose(g, g), pg.parts[1].transversal));
  CHECK(clopen_equal(acc, orbit));

  // both policies give valid transversals of the same levels
  PeriodDecomposition alt = period_decomposition(s, 0, TransversalPolicy::LexGreatest);
  CHECK(clopen_equal(alt.parts[1].level, pd.parts[1].level));
  CHECK(clopen_equal(clopen_union(alt.parts[1].transversal,
                                  image(s, alt.parts[1].transversal)),
                     both));
  // levels of all parts partition the space
  ClopenSet levels = ClopenSet::empty_set(sys);
  for (const auto& part : pd.parts) levels = clopen_union(levels, part.level);
  CHECK(levels.is_full());
}

TEST_CASE("infinite order is reported for the shift") {
  auto sys = sturmian();
  CHECK_THROWS_AS(period_decomposition(FullGroupElement::shift_power(sys, 1), 32), Error);
}
