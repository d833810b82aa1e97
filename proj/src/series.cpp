#include "pathvar/series.hpp"

#include "pathvar/freealg.hpp"

namespace pathvar {

TruncatedSeries::TruncatedSeries(int dim, int level) : level_(level), body_(dim) {
  if (level < 0) throw ValidationError("truncation level must be non-negative");
}

TruncatedSeries TruncatedSeries::unit(int dim, int level) {
  TruncatedSeries g(dim, level);
  g.add(Word{}, 1);
  return g;
}

TruncatedSeries TruncatedSeries::from_tensor(const FreeTensor& x, int level) {
  if (!x.is_zero() && x.degree() > static_cast<std::size_t>(level))
    throw ValidationError("tensor of degree " + std::to_string(x.degree()) + " exceeds truncation level " +
                          std::to_string(level));
  TruncatedSeries g(x.dim(), level);
  g.body_ = x;
  return g;
}

void TruncatedSeries::add(const Word& w, const Rational& c) {
  if (w.degree() > static_cast<std::size_t>(level_))
    throw ValidationError("word above truncation level");
  body_.add(w, c);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o, const char* op) const {
  body_.require_same_dim(o.body_, op);
  if (level_ != o.level_)
    throw ValidationError(std::string(op) + ": level mismatch (" + std::to_string(level_) + " vs " +
                          std::to_string(o.level_) + ")");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_compatible(o, "series add");
  body_ += o.body_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_compatible(o, "series subtract");
  body_ -= o.body_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  body_ *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& g) {
  return os << g.as_tensor() << " (level " << g.level() << ")";
}

Rational pair(const TruncatedSeries& g, const FreeTensor& x) {
  g.as_tensor().require_same_dim(x, "pair");
  if (!x.is_zero() && x.degree() > static_cast<std::size_t>(g.level()))
    throw ValidationError("pair: tensor degree " + std::to_string(x.degree()) + " exceeds series level " +
                          std::to_string(g.level()));
  Rational out = 0;
  const auto& small = x.size() < g.terms().size() ? x.terms() : g.terms();
  const auto& big = x.size() < g.terms().size() ? g.terms() : x.terms();
  for (const auto& [w, c] : small)
    if (auto it = big.find(w); it != big.end()) out += c * it->second;
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& g, const TruncatedSeries& h) {
  g.require_compatible(h, "series_mul");
  const std::size_t n = static_cast<std::size_t>(g.level());
  FreeTensor out(g.dim());
  for (const auto& [u, a] : g.terms())
    for (const auto& [v, b] : h.terms()) {
      if (u.degree() + v.degree() > n) break;  // h is graded, later terms are longer
      out.add(u * v, a * b);
    }
  return TruncatedSeries::from_tensor(out, g.level());
}

namespace {

// Σ_{k=0}^{N} coeffs[k] h^{•k} for h without constant term.
TruncatedSeries power_series(const TruncatedSeries& h, const std::vector<Rational>& coeffs) {
  TruncatedSeries out(h.dim(), h.level());
  TruncatedSeries power = TruncatedSeries::unit(h.dim(), h.level());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) power = series_mul(power, h);
    if (power.terms().empty()) break;
    out += coeffs[k] * power;
  }
  return out;
}

}  // namespace

TruncatedSeries series_inverse(const TruncatedSeries& g) {
  const Rational c = g.constant_term();
  if (c == 0) throw ValidationError("series_inverse: e-coefficient is zero");
  const Rational inv_c = 1 / c;
  // g = c(1 + h)  =>  g^{-1} = c^{-1} Σ (-h)^k
  TruncatedSeries h = inv_c * g;
  h.add(Word{}, -1);
  std::vector<Rational> coeffs(static_cast<std::size_t>(g.level()) + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = k % 2 ? Rational(-inv_c) : inv_c;
  return power_series(h, coeffs);
}

TruncatedSeries series_antipode(const TruncatedSeries& g) {
  return TruncatedSeries::from_tensor(antipode(g.as_tensor()), g.level());
}

TruncatedSeries exp_conc(const TruncatedSeries& l) {
  if (l.constant_term() != 0) throw ValidationError("exp_conc: argument must have zero e-coefficient");
  std::vector<Rational> coeffs(static_cast<std::size_t>(l.level()) + 1);
  Rational fact = 1;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    coeffs[k] = Rational(1) / fact;
  }
  return power_series(l, coeffs);
}

TruncatedSeries log_conc(const TruncatedSeries& g) {
  if (g.constant_term() != 1) throw ValidationError("log_conc: e-coefficient must be 1");
  TruncatedSeries h = g;
  h.add(Word{}, -1);
  std::vector<Rational> coeffs(static_cast<std::size_t>(g.level()) + 1);
  coeffs[0] = 0;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    coeffs[k] = Rational(k % 2 ? 1 : -1) / static_cast<long>(k);
  return power_series(h, coeffs);
}

namespace {

// Visits all unordered pairs (u, v) of nonempty words with |u| + |v| <= N.
// Stops early if the visitor returns false.
template <typename Visit>
bool all_word_pairs(int dim, int level, Visit&& visit) {
  const auto words = words_up_to(dim, static_cast<std::size_t>(level > 0 ? level - 1 : 0));
  for (std::size_t i = 1; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      if (words[i].degree() + words[j].degree() > static_cast<std::size_t>(level)) break;
      if (!visit(words[i], words[j])) return false;
    }
  return true;
}

Rational pair_terms(const TruncatedSeries& g, const TermMap& x) {
  Rational out = 0;
  for (const auto& [w, c] : x) out += c * g.coeff(w);
  return out;
}

}  // namespace

bool is_grouplike(const TruncatedSeries& g) {
  if (g.constant_term() != 1) return false;
  return all_word_pairs(g.dim(), g.level(), [&](const Word& u, const Word& v) {
    return pair_terms(g, word_shuffle(u, v)) == g.coeff(u) * g.coeff(v);
  });
}

bool is_lie(const TruncatedSeries& l) {
  if (l.constant_term() != 0) return false;
  return all_word_pairs(l.dim(), l.level(),
                        [&](const Word& u, const Word& v) { return pair_terms(l, word_shuffle(u, v)) == 0; });
}

Rational first_kind_coordinate(const FreeTensor& x, const TruncatedSeries& g) {
  if (!is_grouplike(g)) throw ValidationError("first_kind_coordinate: series is not grouplike");
  return pair(log_conc(g), x);
}

LiePoly LiePoly::from_series(TruncatedSeries s) {
  if (!is_lie(s)) throw ValidationError("series is not a Lie element");
  return LiePoly(std::move(s));
}

}  // namespace pathvar
