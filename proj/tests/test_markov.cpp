#include <random>

#include "doctest.h"
#include "ewb/closure.hpp"
#include "ewb/errors.hpp"
#include "ewb/free_group.hpp"
#include "ewb/markov.hpp"
#include "support.hpp"

using namespace ewb;
using ewb::testing::fixture_l1;
using ewb::testing::word;

TEST_CASE("apply_move") {
  CHECK(apply_move(word(3, "s1 r2"), MarkovMove::cyclic_shift(1)) == word(3, "r2 s1"));
  const BraidWord welded = apply_move(word(2, "s1"), MarkovMove::stabilize(StabilizationType::Welded));
  CHECK(welded == word(3, "s1 r2"));
  CHECK(apply_move(word(2, "s1"), MarkovMove::stabilize(StabilizationType::Positive)) == word(3, "s1 s2"));
  CHECK(apply_move(word(2, "s1"), MarkovMove::stabilize(StabilizationType::Negative)) == word(3, "s1 S2"));
  CHECK(apply_move(welded, MarkovMove::destabilize()) == word(2, "s1"));
  CHECK(apply_move(word(3, "s1 s2 s1"), MarkovMove::rewrite_to(word(3, "s2 s1 s2"))) == word(3, "s2 s1 s2"));
}

TEST_CASE("apply_move rejects inapplicable moves") {
  CHECK_THROWS_AS(apply_move(word(3, "s2 s1"), MarkovMove::destabilize()), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(word(3, "t3 s2"), MarkovMove::destabilize()), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(word(1, ""), MarkovMove::destabilize()), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(word(2, "s1"), MarkovMove::cyclic_shift(1)), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(word(2, "s1"), MarkovMove::rewrite_to(word(2, "S1"))), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(word(2, "s1"), MarkovMove::rewrite_to(word(3, "s1"))), std::invalid_argument);
  CHECK(can_destabilize(word(3, "s1 t2 S2")));
  CHECK_FALSE(can_destabilize(word(3, "s1 t2 t3")));
}

TEST_CASE("move serialization") {
  const std::vector<MarkovMove> moves = {
      MarkovMove::cyclic_shift(2), MarkovMove::stabilize(StabilizationType::Positive),
      MarkovMove::stabilize(StabilizationType::Negative), MarkovMove::stabilize(StabilizationType::Welded),
      MarkovMove::rewrite_to(word(5, "s4 t5")), MarkovMove::destabilize(),
      MarkovMove::rewrite_to(BraidWord::identity(4))};
  const std::string text = format_moves(moves);
  CHECK(text == "m1 2\nm2+\nm2-\nm2w\nm0 s4 t5\nm2d\nm0\n");
  CHECK(parse_moves(text, 2) == moves);
  CHECK_THROWS_AS(parse_moves("m3\n", 2), ParseError);
  CHECK_THROWS_AS(parse_moves("m1 -1\n", 2), ParseError);
  CHECK_THROWS_AS(parse_moves("m0 s2\n", 2), ParseError);
}

TEST_CASE("sign reversal on words") {
  CHECK(sign_reversal_word(word(2, "s1")) == word(2, "r1 S1 r1"));
  CHECK(sign_reversal_word(BraidWord::identity(3)) == BraidWord::identity(3));
  CHECK(sign_reversal_word(word(3, "S2 t1 r1")) == word(3, "r2 s2 r2 t1 r1"));
}

TEST_CASE("wen delta conjugation equals sign reversal") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 6; ++n) {
    CHECK(to_automorphism(compose(wen_delta(n), wen_delta(n))).is_identity());
  }
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const BraidWord b = random_word(n, std::uniform_int_distribution<std::size_t>(0, 15)(rng), rng);
    const BraidWord d = wen_delta(n);
    CHECK(words_equal(sign_reversal_word(b), compose(compose(d, b), d)));
  }
}

TEST_CASE("closure of the sign-reversed word is the sign-reversed closure") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord b = ewb::testing::random_closable_word(rng, 5, 10);
    CHECK(closure(sign_reversal_word(b)) == sign_reversal(closure(b)));
  }
}

TEST_CASE("mirror word") {
  CHECK(mirror_word(word(2, "s1")) == word(2, "S1"));
  CHECK(mirror_word(word(3, "s1 r2")) == word(3, "S2 r1"));
  CHECK(mirror_word(word(3, "t1 t3")) == word(3, "t3 t1"));
  std::mt19937_64 rng(43);
  int tested = 0;
  while (tested < 100) {
    const BraidWord b = ewb::testing::random_closable_word(rng, 5, 12);
    if (component_count(closure(b)) != 1) continue;
    ++tested;
    CHECK(mirror_word(mirror_word(b)) == b);
    CHECK(same_gauss_data(closure(mirror_word(b)), sign_reversal(closure(b))).has_value());
  }
}

TEST_CASE("linking invariant") {
  const LinkingClass u = linking_invariant(GaussData{{}, {}, 1});
  CHECK(u.components == 1);
  CHECK(u.entries == std::vector<int>{0});
  CHECK(linking_invariant(GaussData{{}, {}, 0}).entries.empty());
  const LinkingClass two = linking_invariant(GaussData{{}, {}, 2});
  CHECK(two.entries == std::vector<int>(4, 0));

  const GaussData l1 = fixture_l1();
  // c3: the curl (component 2) passes over the main component
  const auto raw = linking_matrix(l1);
  CHECK(raw[1][0] == 1);
  CHECK(raw[0][1] == 0);
  CHECK(linking_invariant(l1) == linking_invariant(sign_reversal(l1)));

  // s1^2 on two strands: two components over/under each other once each
  const auto hopf = linking_matrix(closure(word(2, "s1 s1")));
  CHECK(hopf[0][1] + hopf[1][0] == 2);
  CHECK(linking_invariant(closure(word(2, "s1 s1"))) != linking_invariant(closure(word(2, "s1 S1"))));

  CHECK_THROWS_AS(linking_invariant(GaussData{{}, {}, 7}), std::domain_error);
}

TEST_CASE("linking invariant is constant across wen elimination and full loop slides") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussData g = closure(ewb::testing::random_closable_word(rng, 5, 12));
    if (component_count(g) > 6) continue;
    const LinkingClass lk = linking_invariant(g);
    CHECK(linking_invariant(eliminate_wens(g).result) == lk);
    for (std::size_t k = 0; k < component_count(g); ++k) CHECK(linking_invariant(full_loop_slide(g, k)) == lk);
  }
}
