#pragma once

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "pathvar/rational.hpp"
#include "pathvar/word.hpp"

namespace pathvar {

using TermMap = std::map<Word, Rational>;

/// Sparse element of the tensor algebra T(R^d) with exact coefficients.
///
/// Terms are kept in graded-lex order and zero coefficients are never stored,
/// so structural equality is mathematical equality.
class FreeTensor {
 public:
  explicit FreeTensor(int dim);

  static FreeTensor unit(int dim) { return word(dim, Word{}); }
  static FreeTensor word(int dim, Word w, Rational c = 1);
  static FreeTensor letter(int dim, Letter a, Rational c = 1);
  static FreeTensor from_terms(int dim, const std::vector<std::pair<Word, Rational>>& terms);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Word& w) const;
  Rational constant_term() const { return coeff(Word{}); }

  /// Accumulates c*w; erases the entry if it cancels. Letters are not range-checked.
  void add(const Word& w, const Rational& c);
  void add_scaled(const FreeTensor& other, const Rational& c);

  /// Largest / smallest degree among stored terms (0 for the zero tensor).
  std::size_t degree() const;
  std::size_t min_degree() const;
  /// Graded-lex largest word with nonzero coefficient.
  const Word& leading_word() const;

  FreeTensor homogeneous_part(std::size_t k) const;
  FreeTensor truncated(std::size_t max_degree) const;

  void check_word(const Word& w) const;
  void require_same_dim(const FreeTensor& other, const char* op) const;

  FreeTensor& operator+=(const FreeTensor& o);
  FreeTensor& operator-=(const FreeTensor& o);
  FreeTensor& operator*=(const Rational& c);

  friend FreeTensor operator+(FreeTensor a, const FreeTensor& b) { return a += b; }
  friend FreeTensor operator-(FreeTensor a, const FreeTensor& b) { return a -= b; }
  friend FreeTensor operator*(FreeTensor a, const Rational& c) { return a *= c; }
  friend FreeTensor operator*(const Rational& c, FreeTensor a) { return a *= c; }
  friend bool operator==(const FreeTensor& a, const FreeTensor& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  TermMap terms_;
};

FreeTensor operator-(FreeTensor a);
std::ostream& operator<<(std::ostream& os, const FreeTensor& t);

}  // namespace pathvar
