#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ewb/braid.hpp"

namespace ewb {

/// x_generator^exponent, generator 1-based, exponent +1 or -1.
struct Syllable {
  int generator;
  int exponent;

  Syllable inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in the free group. Reduction happens on every append.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(int i, int exponent = 1);

  void append(Syllable s);
  void append(const FreeWord& w);

  FreeWord inverse() const;
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  friend FreeWord operator*(FreeWord a, const FreeWord& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// "x1 X2 x1" style; capital X for exponent -1, "1" for the empty word.
std::string to_string(const FreeWord& w);

/// An endomorphism of F_n given by the images of x_1..x_n. Composition is
/// written in action order: `f.then(g)` first applies f, then g.
class FreeGroupAutomorphism {
 public:
  explicit FreeGroupAutomorphism(std::vector<FreeWord> images);
  static FreeGroupAutomorphism identity(int strands);

  int strands() const noexcept { return static_cast<int>(images_.size()); }
  const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<FreeWord>& images() const noexcept { return images_; }

  /// Substitute the images into w.
  FreeWord apply(const FreeWord& w) const;
  FreeGroupAutomorphism then(const FreeGroupAutomorphism& next) const;

  bool is_identity() const;

  friend bool operator==(const FreeGroupAutomorphism&, const FreeGroupAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

struct AutomorphismHash {
  std::size_t operator()(const FreeGroupAutomorphism& f) const noexcept;
};

std::string to_string(const FreeGroupAutomorphism& f);

/// The automorphism of a single generator letter on `strands` strands.
FreeGroupAutomorphism letter_automorphism(const Letter& letter, int strands);
FreeGroupAutomorphism to_automorphism(const BraidWord& b);

/// Group equality decided in the automorphism representation.
bool words_equal(const BraidWord& a, const BraidWord& b);

/// If w = u x_j^e u^{-1} (reduced), returns (j, e).
std::optional<Syllable> conjugate_of_generator(const FreeWord& w);

}  // namespace ewb
