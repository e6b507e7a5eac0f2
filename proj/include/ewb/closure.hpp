#pragma once

#include <vector>

#include "ewb/braid.hpp"
#include "ewb/gauss.hpp"

namespace ewb {

struct TraceEvent {
  enum class Kind { Passage, Wen };
  Kind kind;
  Passage passage{};  // meaningful for Kind::Passage
};

/// What the strand starting at top position `top` meets on its way down.
struct StrandPath {
  int top;
  int bottom;
  std::vector<TraceEvent> events;
};

/// Strand-by-strand record of a braid word: one crossing per sigma letter
/// (ids c1, c2, ... in word order), welded crossings leave no trace.
struct ClosureTrace {
  std::vector<Crossing> crossings;
  std::vector<StrandPath> strands;  // indexed by top position - 1
};

ClosureTrace closure_trace(const BraidWord& b);

/// Gauss data of the closure. Throws NotClosable on odd wen parity.
/// In sigma_i the strand from position i+1 passes over (slots 2 -> 4);
/// in sigma_i^-1 the strand from position i does. Sign follows the letter.
GaussData closure(const BraidWord& b);

/// Braiding: crossing k becomes sigma_{2k+1}^{sign} on strands 2k+1, 2k+2,
/// followed by a rho routing word and one tau per barred arc; loops become
/// trailing trivial strands. Throws std::invalid_argument if validate fails.
BraidWord braid_from_gauss(const GaussData& g);

}  // namespace ewb
