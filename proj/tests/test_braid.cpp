#include <random>

#include "doctest.h"
#include "ewb/braid.hpp"
#include "ewb/errors.hpp"
#include "ewb/free_group.hpp"
#include "ewb/relations.hpp"
#include "support.hpp"

using namespace ewb;
using ewb::testing::word;

TEST_CASE("parse_word transliterates tokens") {
  const BraidWord b = parse_word("s1 r2 t3", 3);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Letter::sigma(1));
  CHECK(b[1] == Letter::rho(2));
  CHECK(b[2] == Letter::tau(3));
  CHECK(parse_word("S2", 3)[0] == Letter::sigma(2, -1));
}

TEST_CASE("parse_word edge cases") {
  CHECK(parse_word("", 5) == BraidWord::identity(5));
  CHECK_THROWS_AS(parse_word("s3", 3), ParseError);  // sigma_3 needs 4 strands
  CHECK_NOTHROW(parse_word("t3", 3));
  CHECK_THROWS_AS(parse_word("t4", 3), ParseError);
  CHECK_THROWS_AS(parse_word("x1", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s1a", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s", 3), ParseError);
}

TEST_CASE("word file format") {
  const BraidWord b = parse_word_file("strands 3\ns1 S2 r1 t3\n");
  CHECK(b.strands() == 3);
  CHECK(format_word_file(b) == "strands 3\ns1 S2 r1 t3\n");
  CHECK(parse_word_file("strands 4\n") == BraidWord::identity(4));
  CHECK(parse_word_file("strands 4\n\n") == BraidWord::identity(4));
  try {
    parse_word_file("strands 2\ns1 s2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_word_file("s1 s2\n"), ParseError);
  CHECK_THROWS_AS(parse_word_file("strands 0\n"), ParseError);
}

TEST_CASE("format/parse round trip on random words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const BraidWord b = random_word(n, std::uniform_int_distribution<std::size_t>(0, 15)(rng), rng);
    CHECK(parse_word_file(format_word_file(b)) == b);
  }
}

TEST_CASE("BraidWord validates letter bounds") {
  CHECK_THROWS_AS(BraidWord(2, {Letter::sigma(2)}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(0), std::invalid_argument);
  CHECK_THROWS_AS(Letter::rho(0), std::invalid_argument);
}

TEST_CASE("compose") {
  CHECK(compose(word(2, "s1"), word(2, "r1")) == word(2, "s1 r1"));
  CHECK(compose(word(3, "s1 t2"), BraidWord::identity(3)) == word(3, "s1 t2"));
  const BraidWord tt = compose(word(1, "t1"), word(1, "t1"));
  CHECK(tt == word(1, "t1 t1"));
  CHECK(words_equal(tt, BraidWord::identity(1)));
  CHECK_THROWS_AS(compose(word(2, "s1"), word(3, "s1")), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(word(2, "s1")) == word(2, "S1"));
  CHECK(inverse(word(3, "r1 t2")) == word(3, "t2 r1"));
  CHECK(inverse(word(3, "s1 s2")) == word(3, "S2 S1"));
}

TEST_CASE("underlying permutation") {
  CHECK(underlying_permutation(word(2, "s1")) == Permutation({2, 1}));
  CHECK(underlying_permutation(word(3, "t3")) == Permutation::identity(3));
  const Permutation p = underlying_permutation(word(3, "r1 r2"));
  CHECK(p == Permutation({3, 1, 2}));
  CHECK(p.cycles().size() == 1);
  CHECK(Permutation({2, 1, 3}).cycles() == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("wen parity and closability") {
  CHECK(wen_parity(word(1, "t1")) == std::vector<int>{1});
  CHECK(wen_parity(word(2, "t1 t2 s1")) == std::vector<int>{0});
  CHECK(wen_parity(word(2, "t1 s1")) == std::vector<int>{1});
  CHECK(closable(word(2, "s1")));
  CHECK_FALSE(closable(word(1, "t1")));
  CHECK(closable(word(2, "t1 t2 s1")));
  // tau attributed to the strand at its position at that moment
  CHECK(wen_parity(word(2, "t1 r1 t1")) == std::vector<int>{0});
  CHECK(wen_parity(word(3, "t1 r2 t3")) == std::vector<int>{1, 1});
  CHECK(wen_parity(word(3, "t1 t1 r2 t2")) == std::vector<int>{0, 1});
}

TEST_CASE("sigma exponent parity") {
  CHECK(sigma_exponent_parity(word(3, "s1 S2")) == 0);
  CHECK(sigma_exponent_parity(word(2, "s1")) == 1);
  CHECK(sigma_exponent_parity(word(2, "t2 s1")) == 1);
  CHECK(sigma_exponent_parity(word(2, "r1 S1 r1 t1")) == 1);
}

TEST_CASE("sigma exponent parity is constant on relator-rewritten pairs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    BraidWord a = random_word(n, std::uniform_int_distribution<std::size_t>(0, 12)(rng), rng);
    BraidWord b = a;
    for (int k = 0; k < 3; ++k) b = random_relator_insertion(b, rng);
    REQUIRE(words_equal(a, b));
    CHECK(sigma_exponent_parity(a) == sigma_exponent_parity(b));
  }
}
