#include "ewb/closure.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "ewb/errors.hpp"

namespace ewb {

ClosureTrace closure_trace(const BraidWord& b) {
  const int n = b.strands();
  ClosureTrace trace;
  trace.strands.resize(static_cast<std::size_t>(n));
  std::vector<int> occupant(static_cast<std::size_t>(n));  // top position of strand at pos
  for (int p = 1; p <= n; ++p) {
    occupant[static_cast<std::size_t>(p - 1)] = p;
    trace.strands[static_cast<std::size_t>(p - 1)].top = p;
  }
  auto path = [&](int pos) -> StrandPath& {
    return trace.strands[static_cast<std::size_t>(occupant[static_cast<std::size_t>(pos - 1)] - 1)];
  };
  for (const auto& l : b.letters()) {
    const int i = l.index();
    switch (l.kind()) {
      case LetterKind::Tau:
        path(i).events.push_back({TraceEvent::Kind::Wen, {}});
        break;
      case LetterKind::Rho:
        std::swap(occupant[static_cast<std::size_t>(i - 1)], occupant[static_cast<std::size_t>(i)]);
        break;
      case LetterKind::SigmaPos:
      case LetterKind::SigmaNeg: {
        const std::size_t c = trace.crossings.size();
        trace.crossings.push_back({"c" + std::to_string(c + 1), l.sigma_sign()});
        const int over_pos = l.sigma_sign() > 0 ? i + 1 : i;
        const int under_pos = l.sigma_sign() > 0 ? i : i + 1;
        path(over_pos).events.push_back({TraceEvent::Kind::Passage, {c, Strand::Over}});
        path(under_pos).events.push_back({TraceEvent::Kind::Passage, {c, Strand::Under}});
        std::swap(occupant[static_cast<std::size_t>(i - 1)], occupant[static_cast<std::size_t>(i)]);
        break;
      }
    }
  }
  for (int pos = 1; pos <= n; ++pos) path(pos).bottom = pos;
  return trace;
}

GaussData closure(const BraidWord& b) {
  const auto parity = wen_parity(b);
  for (std::size_t k = 0; k < parity.size(); ++k) {
    if (parity[k] != 0) throw NotClosable(k + 1);
  }
  const ClosureTrace trace = closure_trace(b);
  GaussData g;
  g.crossings = trace.crossings;
  for (const auto& cycle : underlying_permutation(b).cycles()) {
    bool have_exit = false;
    Endpoint last_exit{};
    bool bar = false;           // wens since the last exit
    bool bar_before_first = false;
    std::optional<Endpoint> first_entry;
    for (int top : cycle) {
      for (const auto& ev : trace.strands[static_cast<std::size_t>(top - 1)].events) {
        if (ev.kind == TraceEvent::Kind::Wen) {
          bar = !bar;
          continue;
        }
        const Endpoint entry{ev.passage.crossing, ev.passage.entry_slot()};
        if (have_exit) {
          g.arcs.push_back({last_exit, entry, bar});
        } else {
          first_entry = entry;
          bar_before_first = bar;
        }
        last_exit = {ev.passage.crossing, ev.passage.exit_slot()};
        have_exit = true;
        bar = false;
      }
    }
    if (!first_entry) {
      ++g.loops;
    } else {
      g.arcs.push_back({last_exit, *first_entry, bar != bar_before_first});
    }
  }
  normalize(g);
  return g;
}

BraidWord braid_from_gauss(const GaussData& g) {
  if (auto v = validate(g)) throw std::invalid_argument("braid_from_gauss: " + v->message);
  const int m = static_cast<int>(g.crossings.size());
  const int degree = 2 * m + g.loops;
  if (degree == 0) throw std::invalid_argument("braid_from_gauss: empty diagram has no braid form");

  // Top position entering an endpoint, and position reached after the crossing layer.
  auto entry_position = [&](Endpoint e) {
    const int p = 2 * static_cast<int>(e.crossing) + 1;
    const bool positive = g.crossings[e.crossing].sign > 0;
    return (e.slot == 1) == positive ? p : p + 1;
  };
  auto exit_position = [&](Endpoint e) {
    const int p = 2 * static_cast<int>(e.crossing) + 1;
    const bool positive = g.crossings[e.crossing].sign > 0;
    return (e.slot == 4) == positive ? p : p + 1;
  };

  std::vector<Letter> letters;
  for (int k = 0; k < m; ++k) {
    letters.push_back(Letter::sigma(2 * k + 1, g.crossings[static_cast<std::size_t>(k)].sign));
  }
  // dest[pos-1]: top position the strand at pos must reach; bar for the arc it carries
  std::vector<int> dest(static_cast<std::size_t>(degree));
  std::vector<bool> barred(static_cast<std::size_t>(degree), false);
  for (int p = 2 * m + 1; p <= degree; ++p) dest[static_cast<std::size_t>(p - 1)] = p;
  for (const auto& arc : g.arcs) {
    const auto from = static_cast<std::size_t>(exit_position(arc.source) - 1);
    dest[from] = entry_position(arc.target);
    barred[from] = arc.bar;
  }
  // insertion sort by adjacent transpositions, one rho per swap
  for (std::size_t k = 1; k < dest.size(); ++k) {
    for (std::size_t j = k; j > 0 && dest[j - 1] > dest[j]; --j) {
      std::swap(dest[j - 1], dest[j]);
      std::swap(barred[j - 1], barred[j]);
      letters.push_back(Letter::rho(static_cast<int>(j)));
    }
  }
  for (std::size_t p = 0; p < barred.size(); ++p) {
    if (barred[p]) letters.push_back(Letter::tau(static_cast<int>(p + 1)));
  }
  return BraidWord(degree, std::move(letters));
}

}  // namespace ewb
