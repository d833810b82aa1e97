#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pathvar {

using Letter = std::uint16_t;

/// A word over the alphabet {1..d}; the empty word is the unit e.
///
/// Words are ordered graded-lexicographically: first by length, then
/// letter by letter. All containers keyed by Word inherit this order, which
/// is the canonical order for serialized output.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }

  /// Letters [pos, pos+len).
  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix_from(std::size_t pos) const { return sub(pos, degree() - pos); }
  Word reversed() const;

  Word& push_back(Letter a) {
    letters_.push_back(a);
    return *this;
  }

  Letter max_letter() const;

  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  /// Digit string for alphabets up to 9 letters, comma separated otherwise.
  std::string to_string(int dim) const;
  /// Inverse of to_string; a comma always selects the comma format. Letters are range-checked.
  static Word parse(const std::string& text, int dim);

 private:
  std::vector<Letter> letters_;
};

/// All words of the given degree over {1..dim}, in graded-lex order.
std::vector<Word> words_of_degree(int dim, std::size_t degree);

/// All words of degree <= max_degree (including e), graded-lex order.
std::vector<Word> words_up_to(int dim, std::size_t max_degree);

}  // namespace pathvar
