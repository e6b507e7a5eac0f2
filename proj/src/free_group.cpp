#include "ewb/free_group.hpp"

#include <stdexcept>

namespace ewb {

FreeWord FreeWord::generator(int i, int exponent) {
  FreeWord w;
  w.append(Syllable{i, exponent});
  return w;
}

void FreeWord::append(Syllable s) {
  if (!syllables_.empty() && syllables_.back() == s.inverse()) {
    syllables_.pop_back();
  } else {
    syllables_.push_back(s);
  }
}

void FreeWord::append(const FreeWord& w) {
  for (const auto& s : w.syllables_) append(s);
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.syllables_.push_back(it->inverse());
  }
  return out;
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += (s.exponent > 0 ? 'x' : 'X');
    out += std::to_string(s.generator);
  }
  return out;
}

FreeGroupAutomorphism::FreeGroupAutomorphism(std::vector<FreeWord> images)
    : images_(std::move(images)) {}

FreeGroupAutomorphism FreeGroupAutomorphism::identity(int strands) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(strands));
  for (int i = 1; i <= strands; ++i) images.push_back(FreeWord::generator(i));
  return FreeGroupAutomorphism(std::move(images));
}

FreeWord FreeGroupAutomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (const auto& s : w.syllables()) {
    const FreeWord& img = image(s.generator);
    if (s.exponent > 0) {
      out.append(img);
    } else {
      out.append(img.inverse());
    }
  }
  return out;
}

FreeGroupAutomorphism FreeGroupAutomorphism::then(const FreeGroupAutomorphism& next) const {
  if (next.strands() != strands()) throw std::invalid_argument("automorphism degree mismatch");
  std::vector<FreeWord> images;
  images.reserve(images_.size());
  for (const auto& img : images_) images.push_back(next.apply(img));
  return FreeGroupAutomorphism(std::move(images));
}

bool FreeGroupAutomorphism::is_identity() const {
  return *this == identity(strands());
}

std::size_t AutomorphismHash::operator()(const FreeGroupAutomorphism& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::size_t>(f.strands()));
  for (const auto& img : f.images()) {
    mix(img.size());
    for (const auto& s : img.syllables()) {
      mix(static_cast<std::size_t>(s.generator * 2 + (s.exponent > 0 ? 1 : 0)));
    }
  }
  return h;
}

std::string to_string(const FreeGroupAutomorphism& f) {
  std::string out;
  for (int i = 1; i <= f.strands(); ++i) {
    if (i > 1) out += ", ";
    out += "x" + std::to_string(i) + " -> " + to_string(f.image(i));
  }
  return out;
}

FreeGroupAutomorphism letter_automorphism(const Letter& letter, int strands) {
  auto f = FreeGroupAutomorphism::identity(strands).images();
  const int i = letter.index();
  auto slot = [&f](int k) -> FreeWord& { return f.at(static_cast<std::size_t>(k - 1)); };
  const FreeWord xi = FreeWord::generator(i);
  switch (letter.kind()) {
    case LetterKind::SigmaPos: {
      // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
      const FreeWord xj = FreeWord::generator(i + 1);
      slot(i) = xi * xj * xi.inverse();
      slot(i + 1) = xi;
      break;
    }
    case LetterKind::SigmaNeg: {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      const FreeWord xj = FreeWord::generator(i + 1);
      slot(i) = xj;
      slot(i + 1) = xj.inverse() * xi * xj;
      break;
    }
    case LetterKind::Rho:
      std::swap(slot(i), slot(i + 1));
      break;
    case LetterKind::Tau:
      slot(i) = xi.inverse();
      break;
  }
  return FreeGroupAutomorphism(std::move(f));
}

FreeGroupAutomorphism to_automorphism(const BraidWord& b) {
  auto f = FreeGroupAutomorphism::identity(b.strands());
  for (const auto& l : b.letters()) f = f.then(letter_automorphism(l, b.strands()));
  return f;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("words_equal: degree mismatch");
  return to_automorphism(a) == to_automorphism(b);
}

std::optional<Syllable> conjugate_of_generator(const FreeWord& w) {
  auto s = w.syllables();
  if (s.size() % 2 == 0) return std::nullopt;
  const std::size_t m = s.size() / 2;
  for (std::size_t k = 0; k < m; ++k) {
    if (s[s.size() - 1 - k] != s[k].inverse()) return std::nullopt;
  }
  return s[m];
}

}  // namespace ewb
