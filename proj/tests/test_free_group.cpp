#include <random>

#include "doctest.h"
#include "ewb/free_group.hpp"
#include "ewb/relations.hpp"
#include "support.hpp"

using namespace ewb;
using ewb::testing::word;

namespace {

FreeWord fw(std::initializer_list<Syllable> s) {
  FreeWord w;
  for (auto x : s) w.append(x);
  return w;
}

}  // namespace

TEST_CASE("free reduction is eager") {
  FreeWord w = fw({{1, 1}, {2, 1}, {2, -1}, {1, -1}});
  CHECK(w.empty());
  FreeWord v = fw({{1, 1}, {2, -1}});
  CHECK((v * v.inverse()).empty());
  CHECK(to_string(fw({{1, 1}, {2, -1}})) == "x1 X2");
  CHECK(to_string(FreeWord{}) == "1");
}

TEST_CASE("relation suite holds for every instance up to 6 strands") {
  const auto report = verify_relations(6);
  for (const auto& f : report.failures) {
    INFO(f.family << ": " << format_word(f.lhs) << " = " << format_word(f.rhs) << " on " << f.lhs.strands());
    CHECK(false);
  }
  CHECK(report.ok());
  CHECK(report.checked > 0);
  CHECK(relation_families().size() == 15);
}

TEST_CASE("generator images") {
  // frozen after the relation suite above accepts the assignment
  const auto rho = to_automorphism(word(2, "r1"));
  CHECK(rho.image(1) == FreeWord::generator(2));
  CHECK(rho.image(2) == FreeWord::generator(1));
  const auto tau = to_automorphism(word(2, "t1"));
  CHECK(tau.image(1) == FreeWord::generator(1, -1));
  CHECK(tau.image(2) == FreeWord::generator(2));
  const auto sigma = to_automorphism(word(2, "s1"));
  CHECK(to_string(sigma.image(1)) == "x1 x2 X1");
  CHECK(to_string(sigma.image(2)) == "x1");
  CHECK(to_automorphism(word(2, "r1 r1")).is_identity());
}

TEST_CASE("words_equal") {
  CHECK(words_equal(word(3, "s1 s2 s1"), word(3, "s2 s1 s2")));
  CHECK(words_equal(word(2, "t2 s1"), word(2, "r1 S1 r1 t1")));
  CHECK_FALSE(words_equal(word(2, "s1"), word(2, "S1")));
  CHECK(to_automorphism(word(2, "s1")).image(1) != to_automorphism(word(2, "S1")).image(1));
  CHECK_THROWS_AS(words_equal(word(2, "s1"), word(3, "s1")), std::invalid_argument);
}

TEST_CASE("involutions up to 6 strands") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(to_automorphism(BraidWord(n, {Letter::rho(i), Letter::rho(i)})).is_identity());
    }
    for (int i = 1; i <= n; ++i) {
      CHECK(to_automorphism(BraidWord(n, {Letter::tau(i), Letter::tau(i)})).is_identity());
    }
  }
}

TEST_CASE("homomorphism and inverse properties") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto a = random_word(n, std::uniform_int_distribution<std::size_t>(0, 20)(rng), rng);
    const auto b = random_word(n, std::uniform_int_distribution<std::size_t>(0, 20)(rng), rng);
    CHECK(to_automorphism(compose(a, b)) == to_automorphism(a).then(to_automorphism(b)));
    CHECK(words_equal(compose(a, inverse(a)), BraidWord::identity(n)));
    CHECK(to_automorphism(a).then(to_automorphism(inverse(a))).is_identity());
  }
  CHECK(to_automorphism(BraidWord::identity(4)).is_identity());
}

TEST_CASE("images are signed conjugates of generators") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto b = random_word(n, std::uniform_int_distribution<std::size_t>(0, 15)(rng), rng);
    const auto f = to_automorphism(b);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int i = 1; i <= n; ++i) {
      const auto core = conjugate_of_generator(f.image(i));
      REQUIRE(core.has_value());
      CHECK_FALSE(hit[static_cast<std::size_t>(core->generator - 1)]);
      hit[static_cast<std::size_t>(core->generator - 1)] = true;
    }
  }
}
