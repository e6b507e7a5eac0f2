#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ewb/free_group.hpp"
#include "ewb/markov.hpp"

namespace ewb {

namespace {

constexpr std::size_t kMaxRepresentatives = 4;

/// A single search step between concrete words: `to` is obtained from `from`.
struct Edge {
  enum class Kind { Shift, Stabilize, Destabilize, Conjugate };
  Kind kind;
  std::size_t shift = 0;
  StabilizationType stabilization = StabilizationType::Positive;
  std::optional<Letter> conjugator;
  BraidWord from;
  BraidWord to;
};

struct Node {
  std::vector<BraidWord> reps;  // shortest first, ties lexicographic
  std::size_t parent = 0;
  std::optional<Edge> edge;     // empty at the root
  bool expanded = false;
};

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<FreeGroupAutomorphism, std::size_t, AutomorphismHash> index;
  std::vector<std::size_t> frontier;

  void add_rep(Node& node, const BraidWord& w) const {
    if (std::find(node.reps.begin(), node.reps.end(), w) != node.reps.end()) return;
    node.reps.insert(std::upper_bound(node.reps.begin(), node.reps.end(), w), w);
    if (node.reps.size() > kMaxRepresentatives) node.reps.pop_back();
  }
};

FreeGroupAutomorphism extend(const FreeGroupAutomorphism& f) {
  auto images = f.images();
  images.push_back(FreeWord::generator(f.strands() + 1));
  return FreeGroupAutomorphism(std::move(images));
}

BraidWord conjugate(const BraidWord& w, const Letter& g) {
  std::vector<Letter> letters;
  letters.reserve(w.size() + 2);
  letters.push_back(g.inverse());
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  letters.push_back(g);
  return BraidWord(w.strands(), std::move(letters));
}

std::vector<Letter> generators(int n) {
  std::vector<Letter> out;
  for (int i = 1; i < n; ++i) {
    out.push_back(Letter::sigma(i, +1));
    out.push_back(Letter::sigma(i, -1));
    out.push_back(Letter::rho(i));
  }
  for (int i = 1; i <= n; ++i) out.push_back(Letter::tau(i));
  return out;
}

struct Neighbour {
  Edge edge;
  FreeGroupAutomorphism key;
};

// Keys are derived from the parent's key: right action, so key(u v) = key(u).then(key(v)).
std::vector<Neighbour> neighbours(const BraidWord& w, const FreeGroupAutomorphism& key,
                                  const SearchLimits& limits) {
  std::vector<Neighbour> out;
  const int n = w.strands();
  const std::size_t len = w.size();
  auto conj_key = [n](const FreeGroupAutomorphism& k, const Letter& g) {
    return letter_automorphism(g.inverse(), n).then(k).then(letter_automorphism(g, n));
  };

  FreeGroupAutomorphism shifted = key;
  for (std::size_t k = 1; k < len; ++k) {
    shifted = conj_key(shifted, w[k - 1]);
    Edge e{Edge::Kind::Shift, k, {}, {}, w, apply_move(w, MarkovMove::cyclic_shift(k))};
    out.push_back({std::move(e), shifted});
  }
  if (len + 2 <= limits.max_length) {
    for (const auto& g : generators(n)) {
      Edge e{Edge::Kind::Conjugate, 0, {}, g, w, conjugate(w, g)};
      out.push_back({std::move(e), conj_key(key, g)});
    }
  }
  if (n + 1 <= limits.max_degree && len + 1 <= limits.max_length) {
    const auto ext = extend(key);
    for (auto t : {StabilizationType::Positive, StabilizationType::Negative, StabilizationType::Welded}) {
      Edge e{Edge::Kind::Stabilize, 0, t, {}, w, apply_move(w, MarkovMove::stabilize(t))};
      out.push_back({std::move(e), ext.then(letter_automorphism(stabilization_letter(t, n), n + 1))});
    }
  }
  if (can_destabilize(w)) {
    BraidWord down = apply_move(w, MarkovMove::destabilize());
    auto k = to_automorphism(down);
    out.push_back({Edge{Edge::Kind::Destabilize, 0, {}, {}, w, std::move(down)}, std::move(k)});
  }
  return out;
}

Edge reversed(const Edge& e) {
  switch (e.kind) {
    case Edge::Kind::Shift: {
      const std::size_t len = e.from.size();
      return {Edge::Kind::Shift, (len - e.shift) % len, {}, {}, e.to, e.from};
    }
    case Edge::Kind::Stabilize:
      return {Edge::Kind::Destabilize, 0, {}, {}, e.to, e.from};
    case Edge::Kind::Destabilize: {
      const Letter last = e.from[e.from.size() - 1];
      const StabilizationType t = last.kind() == LetterKind::Rho ? StabilizationType::Welded
                                  : last.sigma_sign() > 0        ? StabilizationType::Positive
                                                                 : StabilizationType::Negative;
      return {Edge::Kind::Stabilize, 0, t, {}, e.to, e.from};
    }
    case Edge::Kind::Conjugate: {
      const Letter g = e.conjugator->inverse();
      return {Edge::Kind::Conjugate, 0, {}, g, e.to, conjugate(e.to, g)};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Edge> path_from_root(const Side& side, std::size_t node) {
  std::vector<Edge> edges;
  while (side.nodes[node].edge) {
    edges.push_back(*side.nodes[node].edge);
    node = side.nodes[node].parent;
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

MoveWitness build_witness(const BraidWord& a, const BraidWord& b, const Side& from_a,
                          std::size_t meet_a, const Side& from_b, std::size_t meet_b) {
  std::vector<Edge> edges = path_from_root(from_a, meet_a);
  auto back = path_from_root(from_b, meet_b);
  for (auto it = back.rbegin(); it != back.rend(); ++it) edges.push_back(reversed(*it));

  MoveWitness w{a, {}, b};
  BraidWord cur = a;
  for (const auto& e : edges) {
    if (cur != e.from) w.moves.push_back(MarkovMove::rewrite_to(e.from));
    switch (e.kind) {
      case Edge::Kind::Shift: w.moves.push_back(MarkovMove::cyclic_shift(e.shift)); break;
      case Edge::Kind::Stabilize: w.moves.push_back(MarkovMove::stabilize(e.stabilization)); break;
      case Edge::Kind::Destabilize: w.moves.push_back(MarkovMove::destabilize()); break;
      case Edge::Kind::Conjugate: {
        // w -> w g g^-1 (M0), then rotate g^-1 to the front (M1)
        BraidWord padded = append(append(e.from, *e.conjugator), e.conjugator->inverse());
        w.moves.push_back(MarkovMove::rewrite_to(std::move(padded)));
        w.moves.push_back(MarkovMove::cyclic_shift(e.from.size() + 1));
        break;
      }
    }
    cur = e.to;
  }
  if (cur != b) w.moves.push_back(MarkovMove::rewrite_to(b));
  return w;
}

}  // namespace

SearchResult markov_search(const BraidWord& a, const BraidWord& b, const SearchLimits& limits) {
  if (!closable(a) || !closable(b)) throw std::invalid_argument("markov_search: both words must be closable");
  if (limits.budget == 0) throw std::invalid_argument("markov_search: budget must be positive");
  if (limits.max_degree < std::max(a.strands(), b.strands())) {
    throw std::invalid_argument("markov_search: max degree below the input degree");
  }
  if (limits.max_length < std::max(a.size(), b.size())) {
    throw std::invalid_argument("markov_search: max length below the input length");
  }

  SearchResult result;
  Side sides[2];
  const BraidWord* roots[2] = {&a, &b};
  for (int s = 0; s < 2; ++s) {
    Node root;
    root.reps.push_back(*roots[s]);
    sides[s].nodes.push_back(std::move(root));
    sides[s].index.emplace(to_automorphism(*roots[s]), 0);
    sides[s].frontier.push_back(0);
  }
  result.states = 2;
  if (auto it = sides[1].index.find(to_automorphism(a)); it != sides[1].index.end()) {
    result.witness = build_witness(a, b, sides[0], 0, sides[1], 0);
    return result;
  }

  while (!sides[0].frontier.empty() && !sides[1].frontier.empty()) {
    const int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& side = sides[s];
    const Side& other = sides[1 - s];
    std::vector<std::size_t> next;
    for (std::size_t id : side.frontier) {
      side.nodes[id].expanded = true;
      const std::vector<BraidWord> reps = side.nodes[id].reps;
      for (const auto& rep : reps) {
        const auto key = to_automorphism(rep);
        for (auto& nb : neighbours(rep, key, limits)) {
          auto found = side.index.find(nb.key);
          if (found != side.index.end()) {
            Node& existing = side.nodes[found->second];
            if (!existing.expanded) side.add_rep(existing, nb.edge.to);
            continue;
          }
          Node node;
          node.reps.push_back(nb.edge.to);
          node.parent = id;
          node.edge = std::move(nb.edge);
          const std::size_t nid = side.nodes.size();
          side.nodes.push_back(std::move(node));
          side.index.emplace(nb.key, nid);
          next.push_back(nid);
          ++result.states;
          if (auto hit = other.index.find(nb.key); hit != other.index.end()) {
            result.witness = s == 0 ? build_witness(a, b, sides[0], nid, sides[1], hit->second)
                                    : build_witness(a, b, sides[0], hit->second, sides[1], nid);
            return result;
          }
          if (result.states >= limits.budget) return result;
        }
      }
    }
    side.frontier = std::move(next);
  }
  return result;
}

}  // namespace ewb
