#pragma once

#include <random>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

#include "ewb/braid.hpp"
#include "ewb/closure.hpp"
#include "ewb/gauss.hpp"
#include "ewb/relations.hpp"

namespace ewb::testing {

inline GaussData fixture_l1() {
  return parse_gauss(
      "crossing c1 +\ncrossing c2 +\ncrossing c3 +\n"
      "arc c2.3 c1.2 0\narc c1.4 c2.2 1\narc c2.4 c3.1 0\n"
      "arc c3.3 c1.1 0\narc c1.3 c2.1 1\narc c3.4 c3.2 0\nloops 0\n");
}

inline GaussData unknot() { return GaussData{{}, {}, 1}; }

inline BraidWord word(int n, const std::string& tokens) { return parse_word(tokens, n); }

/// Rejection-sampled closable word with 1 <= strands <= max_strands, length <= max_length.
inline BraidWord random_closable_word(std::mt19937_64& rng, int max_strands, std::size_t max_length) {
  for (;;) {
    const int n = std::uniform_int_distribution<int>(1, max_strands)(rng);
    const auto len = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
    BraidWord b = random_word(n, len, rng);
    if (closable(b)) return b;
  }
}

/// Same, with a closure that has at least one crossing.
inline BraidWord random_closable_word_with_crossing(std::mt19937_64& rng, int max_strands,
                                                    std::size_t max_length) {
  for (;;) {
    BraidWord b = random_closable_word(rng, max_strands, max_length);
    for (const auto& l : b.letters())
      if (l.is_sigma()) return b;
  }
}

/// Independent oracle for the crossings whose sign eliminate_wens changes:
/// walk each component from its start, pairing wens (1st with 2nd, 3rd with
/// 4th, ...); an over-passage met while a wen is being carried flips.
inline std::set<std::size_t> wen_flip_oracle(const GaussData& g) {
  std::set<std::size_t> flipped;
  for (const auto& comp : components(g)) {
    bool carrying = false;
    for (std::size_t p = 0; p < comp.passages.size(); ++p) {
      // passage p is entered through the arc leaving passage p-1
      if (p > 0 && carrying && comp.passages[p].strand == Strand::Over) {
        const auto c = comp.passages[p].crossing;
        if (!flipped.erase(c)) flipped.insert(c);
      }
      if (g.arcs[comp.arcs[p]].bar) carrying = !carrying;
    }
  }
  return flipped;
}

}  // namespace ewb::testing
