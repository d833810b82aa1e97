#include "pathvar/poly.hpp"

#include <algorithm>

namespace pathvar {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(std::size_t k, Rational c) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational UniPoly::at_one() const {
  Rational acc = 0;
  for (const auto& c : c_) acc += c;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::integral() const {
  if (c_.empty()) return {};
  std::vector<Rational> out(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) out[k + 1] = c_[k] / static_cast<long>(k + 1);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(p.coeffs()[k]);
    if (k) os << "*t^" << k;
  }
  return os;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw ValidationError("polynomial needs at least one variable");
}

MultiPoly MultiPoly::variable(int nvars, int j) {
  if (j < 1 || j > nvars) throw ValidationError("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  p.add(e, 1);
  return p;
}

MultiPoly MultiPoly::constant(int nvars, Rational c) {
  MultiPoly p(nvars);
  p.add(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(static_cast<std::size_t>(nvars_), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int deg = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    deg = std::max(deg, s);
  }
  return deg;
}

void MultiPoly::add(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ValidationError("exponent vector has wrong length");
  if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
    throw ValidationError("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::operator()(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw ValidationError("wrong number of arguments");
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) m *= x[j];
    out += m;
  }
  return out;
}

UniPoly MultiPoly::compose(const std::vector<UniPoly>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw ValidationError("wrong number of arguments");
  // powers[j][k] = x_j^k
  std::vector<std::vector<UniPoly>> powers(x.size());
  for (const auto& [e, c] : terms_)
    for (std::size_t j = 0; j < e.size(); ++j) {
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(UniPoly::constant(1));
      while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * x[j]);
    }
  UniPoly out;
  for (const auto& [e, c] : terms_) {
    UniPoly m = UniPoly::constant(c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) m = m * powers[j][static_cast<std::size_t>(e[j])];
    out += m;
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw ValidationError("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw ValidationError("polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw ValidationError("polynomial variable count mismatch");
  MultiPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add(e, ca * cb);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) os << "*x" << j + 1 << (e[j] > 1 ? "^" + std::to_string(e[j]) : "");
  }
  return os;
}

PolynomialMap::PolynomialMap(int source, std::vector<MultiPoly> comps)
    : source_dim(source), components(std::move(comps)) {
  if (components.empty()) throw ValidationError("polynomial map needs at least one component");
  for (const auto& c : components)
    if (c.nvars() != source_dim) throw ValidationError("polynomial map components disagree on variable count");
}

bool PolynomialMap::vanishes_at_origin() const {
  return std::all_of(components.begin(), components.end(), [](const MultiPoly& c) { return c.constant_term() == 0; });
}

PolynomialMap PolynomialMap::identity(int dim) {
  std::vector<MultiPoly> comps;
  for (int j = 1; j <= dim; ++j) comps.push_back(MultiPoly::variable(dim, j));
  return PolynomialMap(dim, std::move(comps));
}

}  // namespace pathvar
