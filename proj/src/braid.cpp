#include "ewb/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "ewb/errors.hpp"

namespace ewb {

Letter::Letter(LetterKind kind, int index) : kind_(kind), index_(index) {
  if (index < 1) throw std::invalid_argument("letter index must be >= 1");
}

Letter Letter::sigma(int i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sigma sign must be +1 or -1");
  return {sign > 0 ? LetterKind::SigmaPos : LetterKind::SigmaNeg, i};
}

int Letter::sigma_sign() const noexcept {
  switch (kind_) {
    case LetterKind::SigmaPos: return 1;
    case LetterKind::SigmaNeg: return -1;
    default: return 0;
  }
}

Letter Letter::inverse() const {
  switch (kind_) {
    case LetterKind::SigmaPos: return {LetterKind::SigmaNeg, index_};
    case LetterKind::SigmaNeg: return {LetterKind::SigmaPos, index_};
    default: return *this;
  }
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.reach() > strands_) {
      throw std::invalid_argument("letter " + format_letter(l) + " out of range for " +
                                  std::to_string(strands_) + " strands");
    }
  }
}

std::strong_ordering operator<=>(const BraidWord& a, const BraidWord& b) {
  if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Letter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<Letter> letters;
  letters.reserve(b.size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord add_strand(const BraidWord& b) {
  return BraidWord(b.strands() + 1, {b.letters().begin(), b.letters().end()});
}

BraidWord append(const BraidWord& b, Letter letter) {
  std::vector<Letter> letters(b.letters().begin(), b.letters().end());
  letters.push_back(letter);
  return BraidWord(b.strands(), std::move(letters));
}

std::string format_letter(const Letter& letter) {
  char prefix = 's';
  switch (letter.kind()) {
    case LetterKind::SigmaPos: prefix = 's'; break;
    case LetterKind::SigmaNeg: prefix = 'S'; break;
    case LetterKind::Rho: prefix = 'r'; break;
    case LetterKind::Tau: prefix = 't'; break;
  }
  return prefix + std::to_string(letter.index());
}

Letter parse_letter(std::string_view token) {
  if (token.size() < 2) throw ParseError(0, "malformed token '" + std::string(token) + "'");
  LetterKind kind;
  switch (token[0]) {
    case 's': kind = LetterKind::SigmaPos; break;
    case 'S': kind = LetterKind::SigmaNeg; break;
    case 'r': kind = LetterKind::Rho; break;
    case 't': kind = LetterKind::Tau; break;
    default: throw ParseError(0, "malformed token '" + std::string(token) + "'");
  }
  int index = 0;
  const char* first = token.data() + 1;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index < 1) {
    throw ParseError(0, "malformed token '" + std::string(token) + "'");
  }
  return {kind, index};
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<Letter> parse_tokens(std::string_view tokens, int strands, std::size_t line) {
  std::vector<Letter> letters;
  for (auto tok : split_ws(tokens)) {
    Letter l = [&] {
      try {
        return parse_letter(tok);
      } catch (const ParseError& e) {
        throw ParseError(line, e.what());
      }
    }();
    if (l.reach() > strands) {
      throw ParseError(line, "index out of range: '" + std::string(tok) + "' needs at least " +
                                 std::to_string(l.reach()) + " strands");
    }
    letters.push_back(l);
  }
  return letters;
}

}  // namespace

BraidWord parse_word(std::string_view tokens, int strands) {
  if (strands < 1) throw ParseError(0, "strand count must be positive");
  return BraidWord(strands, parse_tokens(tokens, strands, 0));
}

std::string format_word(const BraidWord& b) {
  std::string out;
  for (const auto& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

BraidWord parse_word_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int strands = 0;
  bool have_header = false;
  std::vector<Letter> letters;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (!have_header) {
      if (toks.empty()) continue;
      if (toks.size() != 2 || toks[0] != "strands") {
        throw ParseError(lineno, "expected 'strands <n>'");
      }
      auto [ptr, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), strands);
      if (ec != std::errc() || ptr != toks[1].data() + toks[1].size() || strands < 1) {
        throw ParseError(lineno, "strand count must be a positive integer");
      }
      have_header = true;
      continue;
    }
    auto more = parse_tokens(line, strands, lineno);
    letters.insert(letters.end(), more.begin(), more.end());
  }
  if (!have_header) throw ParseError(lineno, "missing 'strands <n>' header");
  return BraidWord(strands, std::move(letters));
}

std::string format_word_file(const BraidWord& b) {
  return "strands " + std::to_string(b.strands()) + "\n" + format_word(b) + "\n";
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(image));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[static_cast<std::size_t>(p - 1)]; p = (*this)(p)) {
      seen[static_cast<std::size_t>(p - 1)] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

namespace {

// occupant[pos-1] = top position of the strand currently at pos.
struct StrandTracker {
  std::vector<int> occupant;

  explicit StrandTracker(int n) : occupant(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) occupant[static_cast<std::size_t>(i)] = i + 1;
  }
  int at(int pos) const { return occupant[static_cast<std::size_t>(pos - 1)]; }
  void step(const Letter& l) {
    if (l.kind() != LetterKind::Tau) {
      std::swap(occupant[static_cast<std::size_t>(l.index() - 1)],
                occupant[static_cast<std::size_t>(l.index())]);
    }
  }
};

}  // namespace

Permutation underlying_permutation(const BraidWord& b) {
  StrandTracker tracker(b.strands());
  for (const auto& l : b.letters()) tracker.step(l);
  std::vector<int> image(static_cast<std::size_t>(b.strands()));
  for (int pos = 1; pos <= b.strands(); ++pos) {
    image[static_cast<std::size_t>(tracker.at(pos) - 1)] = pos;
  }
  return Permutation(std::move(image));
}

std::vector<int> wen_parity(const BraidWord& b) {
  std::vector<int> per_strand(static_cast<std::size_t>(b.strands()), 0);
  StrandTracker tracker(b.strands());
  for (const auto& l : b.letters()) {
    if (l.kind() == LetterKind::Tau) per_strand[static_cast<std::size_t>(tracker.at(l.index()) - 1)] ^= 1;
    tracker.step(l);
  }
  std::vector<int> out;
  for (const auto& cycle : underlying_permutation(b).cycles()) {
    int parity = 0;
    for (int p : cycle) parity ^= per_strand[static_cast<std::size_t>(p - 1)];
    out.push_back(parity);
  }
  return out;
}

bool closable(const BraidWord& b) {
  auto parity = wen_parity(b);
  return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
}

int sigma_exponent_parity(const BraidWord& b) {
  int sum = 0;
  for (const auto& l : b.letters()) sum += l.sigma_sign();
  return ((sum % 2) + 2) % 2;
}

}  // namespace ewb
