#include "ewb/relations.hpp"

#include <cstdlib>

#include "ewb/free_group.hpp"

namespace ewb {

namespace {

using L = Letter;
L s(int i) { return L::sigma(i, +1); }
L S(int i) { return L::sigma(i, -1); }
L r(int i) { return L::rho(i); }
L t(int i) { return L::tau(i); }

}  // namespace

const std::vector<std::string>& relation_families() {
  static const std::vector<std::string> names = {
      "sigma far commutation",      // s_i s_j = s_j s_i, |i-j| > 1
      "sigma braid",                // s_i s_i+1 s_i = s_i+1 s_i s_i+1
      "rho far commutation",        // r_i r_j = r_j r_i, |i-j| > 1
      "rho braid",                  // r_i r_i+1 r_i = r_i+1 r_i r_i+1
      "rho involution",             // r_i^2 = 1
      "rho sigma far commutation",  // r_i s_j = s_j r_i, |i-j| > 1
      "mixed rho rho sigma",        // r_i+1 r_i s_i+1 = s_i r_i+1 r_i
      "mixed sigma sigma rho",      // s_i+1 s_i r_i+1 = r_i s_i+1 s_i
      "tau commutation",            // t_i t_j = t_j t_i, i != j
      "tau involution",             // t_i^2 = 1
      "sigma tau far commutation",  // s_i t_j = t_j s_i, |i-j| > 1
      "rho tau far commutation",    // r_i t_j = t_j r_i, |i-j| > 1
      "tau rho",                    // t_i r_i = r_i t_i+1
      "tau sigma",                  // t_i s_i = s_i t_i+1
      "tau sigma twist",            // t_i+1 s_i = r_i S_i r_i t_i
  };
  return names;
}

std::vector<RelationInstance> relation_instances(int n) {
  const auto& fam = relation_families();
  std::vector<RelationInstance> out;
  auto add = [&](std::size_t family, std::vector<L> lhs, std::vector<L> rhs) {
    out.push_back({fam[family], BraidWord(n, std::move(lhs)), BraidWord(n, std::move(rhs))});
  };
  const int m = n - 1;  // sigma / rho indices 1..m
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) > 1) add(0, {s(i), s(j)}, {s(j), s(i)});
  for (int i = 1; i <= n - 2; ++i) add(1, {s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) > 1) add(2, {r(i), r(j)}, {r(j), r(i)});
  for (int i = 1; i <= n - 2; ++i) add(3, {r(i), r(i + 1), r(i)}, {r(i + 1), r(i), r(i + 1)});
  for (int i = 1; i <= m; ++i) add(4, {r(i), r(i)}, {});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) > 1) add(5, {r(i), s(j)}, {s(j), r(i)});
  for (int i = 1; i <= n - 2; ++i) add(6, {r(i + 1), r(i), s(i + 1)}, {s(i), r(i + 1), r(i)});
  for (int i = 1; i <= n - 2; ++i) add(7, {s(i + 1), s(i), r(i + 1)}, {r(i), s(i + 1), s(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) add(8, {t(i), t(j)}, {t(j), t(i)});
  for (int i = 1; i <= n; ++i) add(9, {t(i), t(i)}, {});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::abs(i - j) > 1) add(10, {s(i), t(j)}, {t(j), s(i)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::abs(i - j) > 1) add(11, {r(i), t(j)}, {t(j), r(i)});
  for (int i = 1; i <= m; ++i) add(12, {t(i), r(i)}, {r(i), t(i + 1)});
  for (int i = 1; i <= m; ++i) add(13, {t(i), s(i)}, {s(i), t(i + 1)});
  for (int i = 1; i <= m; ++i) add(14, {t(i + 1), s(i)}, {r(i), S(i), r(i), t(i)});
  return out;
}

RelationReport verify_relations(int max_strands) {
  RelationReport report;
  for (int n = 1; n <= max_strands; ++n) {
    for (auto& rel : relation_instances(n)) {
      ++report.checked;
      if (to_automorphism(rel.lhs) != to_automorphism(rel.rhs)) {
        report.failures.push_back(std::move(rel));
      }
    }
  }
  return report;
}

Letter random_letter(int strands, std::mt19937_64& rng) {
  // n-1 choices each for s, S, r and n for t
  const int m = strands - 1;
  std::uniform_int_distribution<int> pick(0, 3 * m + strands - 1);
  int k = pick(rng);
  if (k < m) return s(k + 1);
  k -= m;
  if (k < m) return S(k + 1);
  k -= m;
  if (k < m) return r(k + 1);
  k -= m;
  return t(k + 1);
}

BraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) letters.push_back(random_letter(strands, rng));
  return BraidWord(strands, std::move(letters));
}

BraidWord random_relator_insertion(const BraidWord& b, std::mt19937_64& rng) {
  auto rels = relation_instances(b.strands());
  if (rels.empty()) return b;
  const auto& rel = rels[std::uniform_int_distribution<std::size_t>(0, rels.size() - 1)(rng)];
  BraidWord relator = compose(rel.lhs, inverse(rel.rhs));
  if (std::bernoulli_distribution(0.5)(rng)) relator = inverse(relator);
  const std::size_t at = std::uniform_int_distribution<std::size_t>(0, b.size())(rng);
  std::vector<Letter> letters(b.letters().begin(), b.letters().begin() + static_cast<std::ptrdiff_t>(at));
  letters.insert(letters.end(), relator.letters().begin(), relator.letters().end());
  letters.insert(letters.end(), b.letters().begin() + static_cast<std::ptrdiff_t>(at), b.letters().end());
  return BraidWord(b.strands(), std::move(letters));
}

}  // namespace ewb
