#include "pathvar/freealg.hpp"

#include <map>

namespace pathvar {

namespace {

void require_positive_degree(const FreeTensor& x, const char* op) {
  if (x.constant_term() != 0)
    throw ValidationError(std::string(op) + ": argument has a nonzero e-coefficient (halfshuffles live on T^{>=1})");
}

void accumulate(TermMap& into, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace

const TermMap& word_shuffle(const Word& u, const Word& v) {
  thread_local std::map<std::pair<Word, Word>, TermMap> memo;
  // commutative: store each unordered pair once
  const Word& a = u <= v ? u : v;
  const Word& b = u <= v ? v : u;
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  TermMap out;
  if (a.empty()) {
    out.emplace(b, 1);
  } else {
    out = word_half_shuffle_right(a, b);
    for (const auto& [w, c] : word_half_shuffle_right(b, a)) accumulate(out, w, c);
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

TermMap word_half_shuffle_right(const Word& u, const Word& v) {
  TermMap out;
  if (v.degree() == 1) {
    out.emplace(u * v, 1);
    return out;
  }
  const Letter last = v.back();
  for (const auto& [w, c] : word_shuffle(u, v.prefix(v.degree() - 1))) out.emplace(Word(w).push_back(last), c);
  return out;
}

TermMap word_half_shuffle_left(const Word& u, const Word& v) {
  TermMap out;
  const Word head{u.front()};
  if (u.degree() == 1) {
    out.emplace(head * v, 1);
    return out;
  }
  for (const auto& [w, c] : word_shuffle(u.suffix_from(1), v)) out.emplace(head * w, c);
  return out;
}

FreeTensor concat_product(const FreeTensor& x, const FreeTensor& y) {
  x.require_same_dim(y, "concat_product");
  FreeTensor out(x.dim());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add(u * v, a * b);
  return out;
}

std::vector<std::pair<FreeTensor, FreeTensor>> deconcat(const FreeTensor& x) {
  std::vector<std::pair<FreeTensor, FreeTensor>> out;
  for (const auto& [w, c] : x.terms())
    for (std::size_t k = 0; k <= w.degree(); ++k)
      out.emplace_back(FreeTensor::word(x.dim(), w.prefix(k), c), FreeTensor::word(x.dim(), w.suffix_from(k)));
  return out;
}

FreeTensor shuffle(const FreeTensor& x, const FreeTensor& y) {
  x.require_same_dim(y, "shuffle");
  FreeTensor out(x.dim());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) {
      const Rational ab = a * b;
      for (const auto& [w, c] : word_shuffle(u, v)) out.add(w, ab * c);
    }
  return out;
}

FreeTensor half_shuffle_right(const FreeTensor& x, const FreeTensor& y) {
  x.require_same_dim(y, "half_shuffle_right");
  require_positive_degree(x, "half_shuffle_right");
  require_positive_degree(y, "half_shuffle_right");
  FreeTensor out(x.dim());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) {
      const Rational ab = a * b;
      for (const auto& [w, c] : word_half_shuffle_right(u, v)) out.add(w, ab * c);
    }
  return out;
}

FreeTensor half_shuffle_left(const FreeTensor& x, const FreeTensor& y) {
  x.require_same_dim(y, "half_shuffle_left");
  require_positive_degree(x, "half_shuffle_left");
  require_positive_degree(y, "half_shuffle_left");
  FreeTensor out(x.dim());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) {
      const Rational ab = a * b;
      for (const auto& [w, c] : word_half_shuffle_left(u, v)) out.add(w, ab * c);
    }
  return out;
}

FreeTensor antipode(const FreeTensor& x) {
  FreeTensor out(x.dim());
  for (const auto& [w, c] : x.terms()) out.add(w.reversed(), w.degree() % 2 ? Rational(-c) : c);
  return out;
}

// ---------------------------------------------------------------------------

LetterMap::LetterMap(int target, std::vector<FreeTensor> imgs)
    : source_dim(static_cast<int>(imgs.size())), target_dim(target), images(std::move(imgs)) {
  if (source_dim < 1) throw ValidationError("letter map needs at least one letter image");
  for (const auto& img : images)
    if (img.dim() != target_dim) throw ValidationError("letter map images must share the target alphabet");
}

bool LetterMap::images_in_positive_degree() const {
  for (const auto& img : images)
    if (img.constant_term() != 0) return false;
  return true;
}

LetterMap LetterMap::identity(int dim) {
  std::vector<FreeTensor> imgs;
  for (int i = 1; i <= dim; ++i) imgs.push_back(FreeTensor::letter(dim, static_cast<Letter>(i)));
  return LetterMap(dim, std::move(imgs));
}

FreeTensor letter_map_extend(const LetterMap& map, const FreeTensor& x, LetterMapMode mode) {
  if (x.dim() != map.source_dim)
    throw ValidationError("letter_map_extend: tensor alphabet " + std::to_string(x.dim()) +
                          " does not match letter map source " + std::to_string(map.source_dim));
  if (mode == LetterMapMode::lambda && !map.images_in_positive_degree())
    throw ValidationError("letter_map_extend: lambda mode needs letter images without e-coefficient");

  // images of prefixes, shared across the words of x
  std::map<Word, FreeTensor> cache;
  cache.emplace(Word{}, FreeTensor::unit(map.target_dim));
  auto image = [&](auto&& self, const Word& w) -> const FreeTensor& {
    if (auto it = cache.find(w); it != cache.end()) return it->second;
    const FreeTensor& head = self(self, w.prefix(w.degree() - 1));
    const FreeTensor& last = map(w.back());
    FreeTensor val = FreeTensor(map.target_dim);
    if (mode == LetterMapMode::multiplicative)
      val = concat_product(head, last);
    else
      val = w.degree() == 1 ? last : half_shuffle_right(head, last);
    return cache.emplace(w, std::move(val)).first->second;
  };

  FreeTensor out(map.target_dim);
  for (const auto& [w, c] : x.terms()) out.add_scaled(image(image, w), c);
  return out;
}

}  // namespace pathvar
