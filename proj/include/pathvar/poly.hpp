#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "pathvar/rational.hpp"

namespace pathvar {

/// Dense univariate polynomial, constant coefficient first. Trailing zeros are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(Rational c) { return UniPoly({std::move(c)}); }
  /// c * t
  static UniPoly linear(Rational c) { return UniPoly({Rational(0), std::move(c)}); }
  static UniPoly monomial(std::size_t k, Rational c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational operator()(const Rational& t) const;
  Rational at_one() const;

  UniPoly derivative() const;
  /// Antiderivative vanishing at 0.
  UniPoly integral() const;
  /// this(inner(t)).
  UniPoly compose(const UniPoly& inner) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

using Exponents = std::vector<int>;

/// Sparse polynomial in `nvars` variables x_1..x_n.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);
  static MultiPoly variable(int nvars, int j);  // x_j, 1-based
  static MultiPoly constant(int nvars, Rational c);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;
  int total_degree() const;

  void add(const Exponents& e, const Rational& c);

  Rational operator()(const std::vector<Rational>& x) const;
  /// Substitutes a univariate polynomial for each variable.
  UniPoly compose(const std::vector<UniPoly>& x) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// p: R^n -> R^m, one MultiPoly per output coordinate.
struct PolynomialMap {
  int source_dim = 0;
  std::vector<MultiPoly> components;

  PolynomialMap(int source, std::vector<MultiPoly> comps);
  int target_dim() const { return static_cast<int>(components.size()); }
  bool vanishes_at_origin() const;
  static PolynomialMap identity(int dim);
};

}  // namespace pathvar
