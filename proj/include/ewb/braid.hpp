#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ewb {

enum class LetterKind { SigmaPos, SigmaNeg, Rho, Tau };

/// One generator letter: sigma_i^{+1}, sigma_i^{-1}, rho_i or tau_i (1-based index).
class Letter {
 public:
  Letter(LetterKind kind, int index);

  static Letter sigma(int i, int sign = +1);
  static Letter rho(int i) { return {LetterKind::Rho, i}; }
  static Letter tau(int i) { return {LetterKind::Tau, i}; }

  LetterKind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }

  bool is_sigma() const noexcept {
    return kind_ == LetterKind::SigmaPos || kind_ == LetterKind::SigmaNeg;
  }
  /// +1 / -1 for sigma letters, 0 otherwise.
  int sigma_sign() const noexcept;

  /// Highest strand position the letter touches.
  int reach() const noexcept { return kind_ == LetterKind::Tau ? index_ : index_ + 1; }

  Letter inverse() const;
  Letter with_index(int i) const { return {kind_, i}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  LetterKind kind_;
  int index_;
};

/// Word in the extended welded braid generators on a fixed number of strands.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const noexcept { return strands_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  /// Shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const BraidWord& a, const BraidWord& b);

 private:
  int strands_;
  std::vector<Letter> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);
/// iota: the same letters on one more strand (trivial strand on the right).
BraidWord add_strand(const BraidWord& b);
BraidWord append(const BraidWord& b, Letter letter);

/// Token form: s<i>, S<i>, r<i>, t<i>.
std::string format_letter(const Letter& letter);
Letter parse_letter(std::string_view token);

/// Whitespace separated tokens, validated against `strands`.
BraidWord parse_word(std::string_view tokens, int strands);
std::string format_word(const BraidWord& b);

/// File form: `strands <n>` line, then a token line (empty = identity).
BraidWord parse_word_file(std::string_view text);
std::string format_word_file(const BraidWord& b);

/// Top-to-bottom strand permutation; sigma and rho swap, tau is trivial.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  /// Bottom position of the strand starting at top position p (1-based).
  int operator()(int p) const { return image_.at(static_cast<std::size_t>(p - 1)); }
  const std::vector<int>& image() const noexcept { return image_; }

  /// Cycles in order of their smallest element, each starting there.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

Permutation underlying_permutation(const BraidWord& b);

/// Wen count mod 2 per closure component (cycle of the underlying permutation).
std::vector<int> wen_parity(const BraidWord& b);
bool closable(const BraidWord& b);
int sigma_exponent_parity(const BraidWord& b);

}  // namespace ewb
