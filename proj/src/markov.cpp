#include "ewb/markov.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ewb/errors.hpp"
#include "ewb/free_group.hpp"

namespace ewb {

Letter stabilization_letter(StabilizationType t, int strands) {
  switch (t) {
    case StabilizationType::Positive: return Letter::sigma(strands, +1);
    case StabilizationType::Negative: return Letter::sigma(strands, -1);
    case StabilizationType::Welded: return Letter::rho(strands);
  }
  throw std::logic_error("unreachable");
}

bool can_destabilize(const BraidWord& b) {
  const int n = b.strands() - 1;
  if (n < 1 || b.empty()) return false;
  const Letter& last = b[b.size() - 1];
  if (last.kind() == LetterKind::Tau || last.index() != n) return false;
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    if (b[k].reach() > n) return false;
  }
  return true;
}

BraidWord apply_move(const BraidWord& b, const MarkovMove& m) {
  switch (m.kind) {
    case MarkovMove::Kind::Rewrite: {
      if (!m.rewrite) throw std::invalid_argument("M0 move without a target word");
      if (m.rewrite->strands() != b.strands()) throw std::invalid_argument("M0 move changes the degree");
      if (!words_equal(b, *m.rewrite)) throw std::invalid_argument("M0 target is not equal in the group");
      return *m.rewrite;
    }
    case MarkovMove::Kind::CyclicShift: {
      if (b.empty()) {
        if (m.shift != 0) throw std::invalid_argument("M1 shift on the empty word");
        return b;
      }
      if (m.shift >= b.size()) throw std::invalid_argument("M1 shift exceeds word length");
      std::vector<Letter> letters(b.letters().begin(), b.letters().end());
      std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(m.shift), letters.end());
      return BraidWord(b.strands(), std::move(letters));
    }
    case MarkovMove::Kind::Stabilize:
      return append(add_strand(b), stabilization_letter(m.stabilization, b.strands()));
    case MarkovMove::Kind::Destabilize: {
      if (!can_destabilize(b)) throw std::invalid_argument("M2 destabilization does not apply");
      return BraidWord(b.strands() - 1, {b.letters().begin(), b.letters().end() - 1});
    }
  }
  throw std::logic_error("unreachable");
}

BraidWord replay(const BraidWord& start, const std::vector<MarkovMove>& moves) {
  BraidWord cur = start;
  for (const auto& m : moves) cur = apply_move(cur, m);
  return cur;
}

bool verify_witness(const MoveWitness& w) {
  try {
    const BraidWord last = replay(w.start, w.moves);
    return last.strands() == w.end.strands() && words_equal(last, w.end);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string format_moves(const std::vector<MarkovMove>& moves) {
  std::string out;
  for (const auto& m : moves) {
    switch (m.kind) {
      case MarkovMove::Kind::Rewrite: {
        const std::string w = format_word(*m.rewrite);
        out += w.empty() ? "m0\n" : "m0 " + w + "\n";
        break;
      }
      case MarkovMove::Kind::CyclicShift: out += "m1 " + std::to_string(m.shift) + "\n"; break;
      case MarkovMove::Kind::Stabilize:
        switch (m.stabilization) {
          case StabilizationType::Positive: out += "m2+\n"; break;
          case StabilizationType::Negative: out += "m2-\n"; break;
          case StabilizationType::Welded: out += "m2w\n"; break;
        }
        break;
      case MarkovMove::Kind::Destabilize: out += "m2d\n"; break;
    }
  }
  return out;
}

std::vector<MarkovMove> parse_moves(std::string_view text, int start_strands) {
  std::vector<MarkovMove> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int degree = start_strands;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string verb;
    if (!(ls >> verb)) continue;
    if (verb == "m0") {
      std::string rest;
      std::getline(ls, rest);
      try {
        out.push_back(MarkovMove::rewrite_to(parse_word(rest, degree)));
      } catch (const ParseError& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (verb == "m1") {
      long long k = -1;
      std::string extra;
      if (!(ls >> k) || k < 0 || (ls >> extra)) throw ParseError(lineno, "expected 'm1 <k>'");
      out.push_back(MarkovMove::cyclic_shift(static_cast<std::size_t>(k)));
    } else if (verb == "m2+" || verb == "m2-" || verb == "m2w" || verb == "m2d") {
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "unexpected argument after " + verb);
      if (verb == "m2d") {
        if (degree < 2) throw ParseError(lineno, "m2d on a single strand");
        --degree;
        out.push_back(MarkovMove::destabilize());
      } else {
        ++degree;
        out.push_back(MarkovMove::stabilize(verb == "m2+"   ? StabilizationType::Positive
                                            : verb == "m2-" ? StabilizationType::Negative
                                                            : StabilizationType::Welded));
      }
    } else {
      throw ParseError(lineno, "unknown move '" + verb + "'");
    }
  }
  return out;
}

BraidWord sign_reversal_word(const BraidWord& b) {
  std::vector<Letter> letters;
  for (const auto& l : b.letters()) {
    if (l.is_sigma()) {
      letters.push_back(Letter::rho(l.index()));
      letters.push_back(l.inverse());
      letters.push_back(Letter::rho(l.index()));
    } else {
      letters.push_back(l);
    }
  }
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord mirror_word(const BraidWord& b) {
  const int n = b.strands();
  std::vector<Letter> letters;
  letters.reserve(b.size());
  for (const auto& l : b.letters()) {
    switch (l.kind()) {
      case LetterKind::SigmaPos:
      case LetterKind::SigmaNeg: letters.push_back(Letter::sigma(n - l.index(), -l.sigma_sign())); break;
      case LetterKind::Rho: letters.push_back(Letter::rho(n - l.index())); break;
      case LetterKind::Tau: letters.push_back(Letter::tau(n + 1 - l.index())); break;
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord wen_delta(int strands) {
  std::vector<Letter> letters;
  for (int i = 1; i <= strands; ++i) letters.push_back(Letter::tau(i));
  return BraidWord(strands, std::move(letters));
}

std::vector<std::vector<int>> linking_matrix(const GaussData& g) {
  if (auto v = validate(g)) throw std::invalid_argument("linking_invariant: " + v->message);
  const auto comps = components(g);
  const std::size_t mu = comps.size();
  const std::size_t m = g.crossings.size();
  std::vector<std::size_t> under_comp(m), over_comp(m);
  std::vector<int> over_parity(m, 0);
  for (std::size_t k = 0; k < mu; ++k) {
    int parity = 0;
    for (std::size_t p = 0; p < comps[k].passages.size(); ++p) {
      const Passage& pass = comps[k].passages[p];
      if (pass.strand == Strand::Over) {
        over_comp[pass.crossing] = k;
        over_parity[pass.crossing] = parity;
      } else {
        under_comp[pass.crossing] = k;
      }
      parity ^= g.arcs[comps[k].arcs[p]].bar ? 1 : 0;
    }
  }
  std::vector<std::vector<int>> lk(mu, std::vector<int>(mu, 0));
  for (std::size_t c = 0; c < m; ++c) {
    if (over_comp[c] == under_comp[c]) continue;
    lk[over_comp[c]][under_comp[c]] += over_parity[c] ? -g.crossings[c].sign : g.crossings[c].sign;
  }
  return lk;
}

LinkingClass linking_invariant(const GaussData& g) {
  const auto lk = linking_matrix(g);
  const std::size_t mu = lk.size();
  if (mu > 6) throw std::domain_error("linking_invariant: more than 6 components");
  LinkingClass best{mu, {}};
  std::vector<std::size_t> perm(mu);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<int> cand(mu * mu);
  do {
    for (unsigned flips = 0; flips < (1u << mu); ++flips) {
      for (std::size_t i = 0; i < mu; ++i) {
        const int s = (flips >> i) & 1u ? -1 : 1;
        for (std::size_t j = 0; j < mu; ++j) cand[i * mu + j] = s * lk[perm[i]][perm[j]];
      }
      if (best.entries.empty() || cand < best.entries) best.entries = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string to_string(const LinkingClass& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.components; ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < c.components; ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(c.entries[i * c.components + j]);
    }
  }
  return out + "]";
}

}  // namespace ewb
