#pragma once

#include <ostream>

#include "pathvar/free_tensor.hpp"

namespace pathvar {

/// An element of T((R^d)) truncated at level N: coefficients on all words of
/// degree <= N, zero entries omitted.
///
/// The level is explicit everywhere; combining series of different levels is
/// an error rather than a silent truncation.
class TruncatedSeries {
 public:
  TruncatedSeries(int dim, int level);

  static TruncatedSeries unit(int dim, int level);
  /// Embeds a tensor; throws if it has terms above `level`.
  static TruncatedSeries from_tensor(const FreeTensor& x, int level);

  int dim() const { return body_.dim(); }
  int level() const { return level_; }
  const TermMap& terms() const { return body_.terms(); }
  const FreeTensor& as_tensor() const { return body_; }
  Rational coeff(const Word& w) const { return body_.coeff(w); }
  Rational constant_term() const { return body_.constant_term(); }

  void add(const Word& w, const Rational& c);

  void require_compatible(const TruncatedSeries& o, const char* op) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.level_ == b.level_ && a.body_ == b.body_;
  }

 private:
  int level_;
  FreeTensor body_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& g);

/// Σ_w g(w) x(w). Throws if x has a term above g's level.
Rational pair(const TruncatedSeries& g, const FreeTensor& x);

/// Concatenation product truncated at the common level.
TruncatedSeries series_mul(const TruncatedSeries& g, const TruncatedSeries& h);
TruncatedSeries series_inverse(const TruncatedSeries& g);
/// Adjoint of the antipode, applied word by word.
TruncatedSeries series_antipode(const TruncatedSeries& g);

/// Σ_{k<=N} ℓ^{•k}/k!; ℓ must have zero e-coefficient.
TruncatedSeries exp_conc(const TruncatedSeries& l);
/// Σ_{k<=N} (-1)^{k+1}(g-1)^{•k}/k; g must have e-coefficient 1.
TruncatedSeries log_conc(const TruncatedSeries& g);

/// g(e) = 1 and <g, u⧢v> = g(u) g(v) for all nonempty words with |u|+|v| <= N.
bool is_grouplike(const TruncatedSeries& g);
/// l(e) = 0 and <l, u⧢v> = 0 for all nonempty words with |u|+|v| <= N.
bool is_lie(const TruncatedSeries& l);

/// <log_•(g), x> for grouplike g.
Rational first_kind_coordinate(const FreeTensor& x, const TruncatedSeries& g);

/// A truncated series that has been checked to be a Lie element.
class LiePoly {
 public:
  static LiePoly from_series(TruncatedSeries s);
  const TruncatedSeries& series() const { return s_; }
  int level() const { return s_.level(); }
  int dim() const { return s_.dim(); }

 private:
  explicit LiePoly(TruncatedSeries s) : s_(std::move(s)) {}
  TruncatedSeries s_;
};

}  // namespace pathvar
