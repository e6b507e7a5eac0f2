#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ewb/braid.hpp"
#include "ewb/gauss.hpp"

namespace ewb {

enum class StabilizationType { Positive, Negative, Welded };

/// M0 (rewrite to a group-equal word), M1 (cyclic shift), M2 (right
/// stabilization and its inverse).
struct MarkovMove {
  enum class Kind { Rewrite, CyclicShift, Stabilize, Destabilize };

  Kind kind;
  std::size_t shift = 0;                                  // CyclicShift
  StabilizationType stabilization = StabilizationType::Positive;  // Stabilize
  std::optional<BraidWord> rewrite;                       // Rewrite

  static MarkovMove rewrite_to(BraidWord w) { return {Kind::Rewrite, 0, {}, std::move(w)}; }
  static MarkovMove cyclic_shift(std::size_t k) { return {Kind::CyclicShift, k, {}, {}}; }
  static MarkovMove stabilize(StabilizationType t) { return {Kind::Stabilize, 0, t, {}}; }
  static MarkovMove destabilize() { return {Kind::Destabilize, 0, {}, {}}; }

  friend bool operator==(const MarkovMove&, const MarkovMove&) = default;
};

/// The letter appended by a stabilization on `strands` strands (before adding one).
Letter stabilization_letter(StabilizationType t, int strands);

/// Last letter is sigma_n^{+-1} or rho_n on n+1 strands and no other letter touches strand n+1.
bool can_destabilize(const BraidWord& b);

/// Throws std::invalid_argument when the move does not apply.
BraidWord apply_move(const BraidWord& b, const MarkovMove& m);

struct MoveWitness {
  BraidWord start;
  std::vector<MarkovMove> moves;
  BraidWord end;
};

/// Applies the moves to `start`.
BraidWord replay(const BraidWord& start, const std::vector<MarkovMove>& moves);
/// Replays and checks the final word equals `end` in the group.
bool verify_witness(const MoveWitness& w);

/// One move per line: `m1 <k>`, `m2+`, `m2-`, `m2w`, `m2d`, `m0 <tokens...>`.
std::string format_moves(const std::vector<MarkovMove>& moves);
/// Rewrite words are read on the degree current at that line, starting from `start_strands`.
std::vector<MarkovMove> parse_moves(std::string_view text, int start_strands);

/// sigma_i^e -> rho_i sigma_i^-e rho_i.
BraidWord sign_reversal_word(const BraidWord& b);
/// Reflection across a vertical axis: sigma_i^e -> sigma_{n-i}^-e, rho_i -> rho_{n-i}, tau_i -> tau_{n+1-i}.
BraidWord mirror_word(const BraidWord& b);
/// tau_1 tau_2 ... tau_n.
BraidWord wen_delta(int strands);

/// Orbit representative of the component linking matrix: entry (i, j) sums
/// the signs of crossings where i passes over j, each sign corrected by the
/// wens met along i before that passage. Canonical under simultaneous
/// row/column permutation and per-row sign flips.
struct LinkingClass {
  std::size_t components = 0;
  std::vector<int> entries;  // row-major, components x components

  friend bool operator==(const LinkingClass&, const LinkingClass&) = default;
};

/// Raw (uncanonicalized) matrix in components() order.
std::vector<std::vector<int>> linking_matrix(const GaussData& g);
/// Throws std::domain_error for more than 6 components.
LinkingClass linking_invariant(const GaussData& g);
std::string to_string(const LinkingClass& c);

struct SearchLimits {
  int max_degree = 8;
  std::size_t max_length = 24;
  std::size_t budget = 100000;
};

struct SearchResult {
  std::optional<MoveWitness> witness;  // empty: inconclusive within budget
  std::size_t states = 0;
  bool found() const { return witness.has_value(); }
};

/// Bidirectional breadth-first search over (degree, automorphism) classes
/// with cyclic shifts, conjugation by generators, stabilizations and
/// destabilizations as edges. Exhausting the budget proves nothing.
SearchResult markov_search(const BraidWord& a, const BraidWord& b, const SearchLimits& limits);

}  // namespace ewb
