#include "pathvar/free_tensor.hpp"

#include <algorithm>
#include <sstream>

namespace pathvar {

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Letter Word::max_letter() const {
  return letters_.empty() ? Letter{0} : *std::max_element(letters_.begin(), letters_.end());
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.degree() + b.degree());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string(int dim) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (dim > 9) {
      if (i) out += ',';
      out += std::to_string(letters_[i]);
    } else {
      out += static_cast<char>('0' + letters_[i]);
    }
  }
  return out;
}

Word Word::parse(const std::string& text, int dim) {
  std::vector<Letter> letters;
  auto check = [&](long v) {
    if (v < 1 || v > dim)
      throw ValidationError("letter " + std::to_string(v) + " outside alphabet {1.." + std::to_string(dim) +
                            "} in word '" + text + "'");
    letters.push_back(static_cast<Letter>(v));
  };
  if (dim > 9 || text.find(',') != std::string::npos) {
    if (text.empty()) return Word{};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ValidationError("malformed word '" + text + "'");
      check(std::stol(item));
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw ValidationError("malformed word '" + text + "'");
      check(c - '0');
    }
  }
  return Word(std::move(letters));
}

std::vector<Word> words_of_degree(int dim, std::size_t degree) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < degree; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * static_cast<std::size_t>(dim));
    for (const auto& w : out)
      for (int a = 1; a <= dim; ++a) next.push_back(Word(w).push_back(static_cast<Letter>(a)));
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(int dim, std::size_t max_degree) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    auto level = words_of_degree(dim, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeTensor::FreeTensor(int dim) : dim_(dim) {
  if (dim < 1) throw ValidationError("alphabet size must be positive");
}

FreeTensor FreeTensor::word(int dim, Word w, Rational c) {
  FreeTensor t(dim);
  t.check_word(w);
  t.add(w, c);
  return t;
}

FreeTensor FreeTensor::letter(int dim, Letter a, Rational c) { return word(dim, Word{a}, std::move(c)); }

FreeTensor FreeTensor::from_terms(int dim, const std::vector<std::pair<Word, Rational>>& terms) {
  FreeTensor t(dim);
  for (const auto& [w, c] : terms) {
    t.check_word(w);
    t.add(w, c);
  }
  return t;
}

void FreeTensor::check_word(const Word& w) const {
  for (Letter a : w.letters())
    if (a < 1 || static_cast<int>(a) > dim_)
      throw ValidationError("letter " + std::to_string(a) + " outside alphabet {1.." + std::to_string(dim_) + "}");
}

Rational FreeTensor::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreeTensor::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void FreeTensor::add_scaled(const FreeTensor& other, const Rational& c) {
  require_same_dim(other, "add");
  if (c == 0) return;
  for (const auto& [w, v] : other.terms_) add(w, c * v);
}

std::size_t FreeTensor::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::size_t FreeTensor::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

const Word& FreeTensor::leading_word() const {
  if (terms_.empty()) throw ValidationError("zero tensor has no leading word");
  return terms_.rbegin()->first;
}

FreeTensor FreeTensor::homogeneous_part(std::size_t k) const {
  FreeTensor out(dim_);
  for (const auto& [w, c] : terms_)
    if (w.degree() == k) out.terms_.emplace_hint(out.terms_.end(), w, c);
  return out;
}

FreeTensor FreeTensor::truncated(std::size_t max_degree) const {
  FreeTensor out(dim_);
  for (const auto& [w, c] : terms_) {
    if (w.degree() > max_degree) break;
    out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

void FreeTensor::require_same_dim(const FreeTensor& other, const char* op) const {
  if (dim_ != other.dim_)
    throw ValidationError(std::string(op) + ": alphabet mismatch (" + std::to_string(dim_) + " vs " +
                          std::to_string(other.dim_) + ")");
}

FreeTensor& FreeTensor::operator+=(const FreeTensor& o) {
  add_scaled(o, 1);
  return *this;
}

FreeTensor& FreeTensor::operator-=(const FreeTensor& o) {
  add_scaled(o, -1);
  return *this;
}

FreeTensor& FreeTensor::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [w, v] : terms_) v *= c;
  }
  return *this;
}

FreeTensor operator-(FreeTensor a) { return a *= Rational(-1); }

std::ostream& operator<<(std::ostream& os, const FreeTensor& t) {
  if (t.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [w, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*[" << (w.empty() ? std::string("e") : w.to_string(t.dim())) << "]";
  }
  return os;
}

}  // namespace pathvar
