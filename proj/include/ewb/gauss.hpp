#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ewb {

/// One of the four points c^1..c^4 where the diagram leaves a crossing
/// neighbourhood. Slots 1,2 are entries, 3,4 exits. A strand entering at 1
/// leaves at 3 (under-passage); entering at 2 it leaves at 4 (over-passage).
struct Endpoint {
  std::size_t crossing;
  int slot;

  bool incoming() const { return slot == 1 || slot == 2; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

/// Oriented arc of the diagram outside the crossing neighbourhoods.
/// `bar` is the wen count on it mod 2.
struct Arc {
  Endpoint source;  // slot 3 or 4
  Endpoint target;  // slot 1 or 2
  bool bar = false;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Crossing {
  std::string id;
  int sign;  // +1 or -1

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Combinatorial description of an extended welded link diagram: real
/// crossings with signs, the decorated arcs between them and the number of
/// crossing-free components. Endpoints refer to crossings by position in
/// `crossings`. Arcs are kept sorted by source (see normalize).
struct GaussData {
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  int loops = 0;

  friend bool operator==(const GaussData&, const GaussData&) = default;
};

/// Sorts arcs by source endpoint.
void normalize(GaussData& g);

enum class Strand { Under, Over };

/// A pass of a component through a crossing.
struct Passage {
  std::size_t crossing;
  Strand strand;

  int entry_slot() const { return strand == Strand::Under ? 1 : 2; }
  int exit_slot() const { return strand == Strand::Under ? 3 : 4; }
  friend bool operator==(const Passage&, const Passage&) = default;
};

/// A closed component: passages in traversal order, and for each passage the
/// index (into GaussData::arcs) of the arc leaving it. Crossing-free loops
/// have no passages.
struct Component {
  std::vector<Passage> passages;
  std::vector<std::size_t> arcs;

  bool is_loop() const { return passages.empty(); }
};

struct Violation {
  enum class Kind { BadCrossing, BadEndpoint, Dangling, Duplicate, OddWenParity, BadLoops };
  Kind kind;
  std::string message;
};

/// First violated structural or evenness clause, or nullopt.
std::optional<Violation> validate(const GaussData& g);
/// Structural clauses only (no wen parity check).
std::optional<Violation> validate_structure(const GaussData& g);

/// Cycles traced through the arcs (lowest crossing, under-passage first),
/// followed by one entry per crossing-free loop.
std::vector<Component> components(const GaussData& g);
std::size_t component_count(const GaussData& g);
/// Bar parity per component, in components() order.
std::vector<int> component_wen_parity(const GaussData& g);

/// Index of the arc leaving / entering an endpoint.
std::size_t arc_from(const GaussData& g, Endpoint source);
std::size_t arc_into(const GaussData& g, Endpoint target);

/// Crossing bijection: crossing k of the first data maps to map[k] of the second.
struct GaussIsomorphism {
  std::vector<std::size_t> map;
};

std::optional<GaussIsomorphism> same_gauss_data(const GaussData& a, const GaussData& b);
/// Whether `iso` really is an isomorphism a -> b.
bool is_isomorphism(const GaussData& a, const GaussData& b, const GaussIsomorphism& iso);

GaussData sign_reversal(const GaussData& g);

enum class SlideDirection { Forward, Backward };

/// Moves the wen on the arc starting at `arc_source` across the next (or
/// previous) crossing passage. Crossing an over-passage flips that crossing's sign.
GaussData slide_wen(const GaussData& g, Endpoint arc_source, SlideDirection direction);

struct WenSlide {
  Endpoint arc_source;
  SlideDirection direction;
};

struct WenElimination {
  GaussData result;
  std::vector<std::size_t> flipped;  // sorted crossing indices
  std::vector<WenSlide> slides;      // in application order
};

/// Slides wens forward until they cancel pairwise. On each component, the
/// first barred arc in traversal order is moved until it meets the next one.
WenElimination eliminate_wens(const GaussData& g);

/// Drags a wen pair once around component `component` (components() index):
/// every over-passage of the component flips its sign, bars are unchanged.
GaussData full_loop_slide(const GaussData& g, std::size_t component);

/// Whether crossing c is a removable R1 kink: an unbarred self-arc c^3->c^2 or c^4->c^1.
bool is_kink(const GaussData& g, std::size_t crossing);
/// Removes one kink crossing, splicing its neighbouring arcs.
GaussData remove_kink(const GaussData& g, std::size_t crossing);
/// Removes kinks (lowest index first) until none is left.
GaussData reduce_kinks(const GaussData& g);

/// Text format: `crossing <id> <+|->`, `arc <a>.<3|4> <b>.<1|2> <0|1>`, `loops <k>`.
GaussData parse_gauss(std::string_view text);
std::string format_gauss(const GaussData& g);
std::string format_endpoint(const GaussData& g, Endpoint e);

}  // namespace ewb
