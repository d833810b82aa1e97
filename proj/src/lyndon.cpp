#include "pathvar/lyndon.hpp"

#include <algorithm>

#include "pathvar/freealg.hpp"

namespace pathvar {

std::vector<Word> lyndon_words(int dim, std::size_t length) {
  std::vector<Word> out;
  if (length == 0) return out;
  // Duval: successively generate all Lyndon words up to `length`, keep those of exact length
  std::vector<Letter> w{1};
  while (!w.empty()) {
    if (w.size() == length) out.emplace_back(w);
    const std::size_t m = w.size();
    while (w.size() < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == dim) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  // strictly smaller (lexicographically) than each proper suffix
  const auto a = w.letters();
  for (std::size_t k = 1; k < w.degree(); ++k)
    if (!std::lexicographical_compare(a.begin(), a.end(), a.begin() + static_cast<std::ptrdiff_t>(k), a.end()))
      return false;
  return true;
}

std::shared_ptr<const Bracket> standard_bracketing(const Word& lyndon) {
  auto node = std::make_shared<Bracket>();
  if (lyndon.degree() == 1) {
    node->letter = lyndon.front();
    return node;
  }
  for (std::size_t k = 1; k < lyndon.degree(); ++k) {
    const Word suffix = lyndon.suffix_from(k);
    if (is_lyndon(suffix)) {
      node->left = standard_bracketing(lyndon.prefix(k));
      node->right = standard_bracketing(suffix);
      return node;
    }
  }
  throw ValidationError("standard_bracketing: word is not Lyndon");
}

FreeTensor expand(const Bracket& b, int dim) {
  if (b.is_leaf()) return FreeTensor::letter(dim, b.letter);
  const FreeTensor l = expand(*b.left, dim), r = expand(*b.right, dim);
  return concat_product(l, r) - concat_product(r, l);
}

std::vector<std::pair<Word, Rational>> lyndon_coordinates(const FreeTensor& x, std::size_t degree) {
  // P_w = w + (lexicographically larger words), so a lex-ordered sweep is triangular.
  FreeTensor rest = x.homogeneous_part(degree);
  if (!(rest == x)) throw ValidationError("lyndon_coordinates: tensor is not homogeneous of the given degree");
  std::vector<std::pair<Word, Rational>> out;
  for (const auto& w : lyndon_words(x.dim(), degree)) {
    const Rational c = rest.coeff(w);
    if (c == 0) continue;
    rest.add_scaled(expand(*standard_bracketing(w), x.dim()), -c);
    out.emplace_back(w, c);
  }
  if (!rest.is_zero()) throw ValidationError("lyndon_coordinates: tensor is not a Lie element");
  return out;
}

}  // namespace pathvar
