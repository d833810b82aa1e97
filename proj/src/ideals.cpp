#include "pathvar/ideals.hpp"

#include <algorithm>
#include <functional>

namespace pathvar {

std::string to_string(ClosureType c) {
  switch (c) {
    case ClosureType::shuffle: return "shuffle";
    case ClosureType::right_half: return "right-half";
    case ClosureType::left_half: return "left-half";
    case ClosureType::both_half: return "both-half";
    case ClosureType::linear: return "linear";
  }
  return "?";
}

ClosureType parse_closure(const std::string& name) {
  if (name == "shuffle") return ClosureType::shuffle;
  if (name == "right-half" || name == "right_half") return ClosureType::right_half;
  if (name == "left-half" || name == "left_half") return ClosureType::left_half;
  if (name == "both-half" || name == "both_half") return ClosureType::both_half;
  if (name == "linear") return ClosureType::linear;
  throw ValidationError("unknown closure '" + name + "'");
}

bool uses_halfshuffle(ClosureType c) {
  return c == ClosureType::right_half || c == ClosureType::left_half || c == ClosureType::both_half;
}

GradedBasis::GradedBasis(int dim, int level, ClosureType closure) : dim_(dim), level_(level), closure_(closure) {
  if (dim < 1) throw ValidationError("alphabet size must be positive");
  if (level < 0) throw ValidationError("level must be non-negative");
}

std::vector<FreeTensor> GradedBasis::rows() const {
  std::vector<FreeTensor> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r);
  return out;
}

std::vector<Word> GradedBasis::pivot_words() const {
  std::vector<Word> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<std::size_t> GradedBasis::pivot_counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(level_) + 1);
  for (const auto& [p, r] : rows_) ++out[p.degree()];
  return out;
}

FreeTensor GradedBasis::reduce(const FreeTensor& x) const {
  x.require_same_dim(FreeTensor(dim_), "reduce");
  // Rows are fully reduced, so each pivot of x is cleared by exactly one row
  // without introducing another pivot word.
  FreeTensor out = x;
  for (const auto& [w, c] : x.terms())
    if (auto it = rows_.find(w); it != rows_.end()) out.add_scaled(it->second, -c);
  return out;
}

std::optional<FreeTensor> GradedBasis::insert(const FreeTensor& x) {
  if (!x.is_zero() && x.degree() > static_cast<std::size_t>(level_))
    throw ValidationError("vector above basis level");
  FreeTensor r = reduce(x);
  if (r.is_zero()) return std::nullopt;
  const Word pivot = r.leading_word();
  r *= Rational(1) / r.coeff(pivot);
  for (auto& [p, row] : rows_) {
    const Rational c = row.coeff(pivot);
    if (c != 0) row.add_scaled(r, -c);
  }
  rows_.emplace(pivot, r);
  return r;
}

namespace {

using Product = std::function<FreeTensor(const FreeTensor&, const FreeTensor&)>;

std::vector<Product> closure_products(ClosureType c) {
  const Product hsr = half_shuffle_right, hsl = half_shuffle_left;
  const Product hsr_rev = [](const FreeTensor& x, const FreeTensor& w) { return half_shuffle_right(w, x); };
  const Product hsl_rev = [](const FreeTensor& x, const FreeTensor& w) { return half_shuffle_left(w, x); };
  switch (c) {
    case ClosureType::shuffle: return {Product(shuffle)};
    case ClosureType::right_half: return {hsr, hsr_rev};
    case ClosureType::left_half: return {hsl, hsl_rev};
    case ClosureType::both_half: return {hsr, hsr_rev, hsl, hsl_rev};
    case ClosureType::linear: return {};
  }
  return {};
}

// Multiplies every vector of `frontier` by every cofactor word that keeps the
// degree within the level; returns the rows that enlarged the basis.
std::vector<FreeTensor> closure_round(GradedBasis& basis, const std::vector<FreeTensor>& frontier) {
  const auto products = closure_products(basis.closure());
  if (products.empty()) return {};
  const auto level = static_cast<std::size_t>(basis.level());
  const auto cofactors = words_up_to(basis.dim(), level);
  std::vector<FreeTensor> added;
  for (const auto& f : frontier) {
    const std::size_t room = level - f.degree();
    for (std::size_t i = 1; i < cofactors.size() && cofactors[i].degree() <= room; ++i) {
      const FreeTensor w = FreeTensor::word(basis.dim(), cofactors[i]);
      for (const auto& op : products)
        if (auto row = basis.insert(op(f, w))) added.push_back(std::move(*row));
    }
  }
  return added;
}

}  // namespace

GradedBasis ideal_basis(const std::vector<FreeTensor>& generators, ClosureType closure, int level, int dim_hint) {
  if (generators.empty()) return GradedBasis(dim_hint, level, closure);
  const int dim = generators.front().dim();
  GradedBasis basis(dim, level, closure);
  std::vector<FreeTensor> frontier;
  for (const auto& g : generators) {
    g.require_same_dim(FreeTensor(dim), "ideal_basis");
    if (g.is_zero()) throw ValidationError("ideal_basis: zero generator");
    if (uses_halfshuffle(closure) && g.constant_term() != 0)
      throw ValidationError("ideal_basis: halfshuffle closure needs generators in T^{>=1}");
    if (g.degree() > static_cast<std::size_t>(level))
      throw ValidationError("ideal_basis: generator of degree " + std::to_string(g.degree()) + " exceeds level " +
                            std::to_string(level));
    if (auto row = basis.insert(g)) frontier.push_back(std::move(*row));
  }
  while (!frontier.empty()) frontier = closure_round(basis, frontier);
  return basis;
}

bool is_saturated(const GradedBasis& basis) {
  GradedBasis copy = basis;
  return closure_round(copy, basis.rows()).empty();
}

MemberResult member(const FreeTensor& x, const GradedBasis& basis) {
  if (x.dim() != basis.dim()) throw ValidationError("member: alphabet mismatch");
  if (!x.is_zero() && x.degree() > static_cast<std::size_t>(basis.level()))
    throw ValidationError("member: tensor degree exceeds basis level");
  MemberResult out;
  if (!basis.reduce(x).is_zero()) return out;
  out.member = true;
  for (const auto& p : basis.pivot_words()) out.coords.push_back(x.coeff(p));
  return out;
}

FreeTensor phi(const MultiPoly& p) {
  if (p.constant_term() != 0) throw ValidationError("phi: polynomial has a nonzero constant term");
  const int dim = p.nvars();
  FreeTensor out(dim);
  for (const auto& [e, c] : p.terms()) {
    FreeTensor mono = FreeTensor::unit(dim);
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k) mono = shuffle(mono, FreeTensor::letter(dim, static_cast<Letter>(j + 1)));
    out.add_scaled(mono, c);
  }
  return out;
}

FreeTensor m_p(const PolynomialMap& p, const FreeTensor& x) {
  if (!p.vanishes_at_origin()) throw ValidationError("m_p: p(0) must be 0");
  std::vector<FreeTensor> images;
  for (const auto& comp : p.components) images.push_back(phi(comp));
  return letter_map_extend(LetterMap(p.source_dim, std::move(images)), x, LetterMapMode::lambda);
}

GradedBasis shift_ideal(const GradedBasis& basis, const TruncatedSeries& g, ShiftSide side) {
  if (g.dim() != basis.dim()) throw ValidationError("shift_ideal: alphabet mismatch");
  if (g.level() < basis.level()) throw ValidationError("shift_ideal: series level below basis level");
  if (!is_grouplike(g)) throw ValidationError("shift_ideal: series is not grouplike");
  const TruncatedSeries h = series_antipode(g);
  GradedBasis out(basis.dim(), basis.level(), ClosureType::linear);
  for (const auto& row : basis.rows()) {
    FreeTensor mapped(basis.dim());
    for (const auto& [w, c] : row.terms())
      for (std::size_t k = 0; k <= w.degree(); ++k) {
        const Word head = w.prefix(k), tail = w.suffix_from(k);
        const Rational weight = side == ShiftSide::left ? h.coeff(head) : h.coeff(tail);
        if (weight != 0) mapped.add(side == ShiftSide::left ? tail : head, c * weight);
      }
    out.insert(mapped);
  }
  return out;
}

namespace {

// Σ_{w = uv} relabel(u, block) ⧢ rest(v) where rest handles the remaining factors.
FreeTensor split_shuffle(const Word& w, int dim, int out_dim, int factors, int block, bool relabel,
                         std::map<std::pair<int, Word>, FreeTensor>& memo) {
  auto key = std::make_pair(block, w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto lift = [&](const Word& u) {
    if (!relabel) return FreeTensor::word(out_dim, u);
    std::vector<Letter> ls;
    for (Letter a : u.letters()) ls.push_back(static_cast<Letter>(a + block * dim));
    return FreeTensor::word(out_dim, Word(std::move(ls)));
  };
  FreeTensor out(out_dim);
  if (block == factors - 1) {
    out = lift(w);
  } else {
    for (std::size_t k = 0; k <= w.degree(); ++k)
      out += shuffle(lift(w.prefix(k)),
                     split_shuffle(w.suffix_from(k), dim, out_dim, factors, block + 1, relabel, memo));
  }
  memo.emplace(key, out);
  return out;
}

FreeTensor split_shuffle_all(const FreeTensor& x, int n, bool relabel) {
  if (n < 1) throw ValidationError("number of factors must be at least 1");
  const int out_dim = relabel ? n * x.dim() : x.dim();
  std::map<std::pair<int, Word>, FreeTensor> memo;
  FreeTensor out(out_dim);
  for (const auto& [w, c] : x.terms()) out.add_scaled(split_shuffle(w, x.dim(), out_dim, n, 0, relabel, memo), c);
  return out;
}

}  // namespace

FreeTensor power_ideal(const FreeTensor& x, int n) { return split_shuffle_all(x, n, false); }

FreeTensor multi_path_ideal(const FreeTensor& x, int n) { return split_shuffle_all(x, n, true); }

GradedBasis power_basis(const GradedBasis& basis, int n) {
  GradedBasis out(basis.dim(), basis.level(), ClosureType::linear);
  for (const auto& row : basis.rows()) out.insert(power_ideal(row, n));
  return out;
}

void require_finite_group(const std::vector<RationalMatrix>& group, int dim) {
  if (group.empty()) throw ValidationError("group is empty");
  const auto d = static_cast<std::size_t>(dim);
  for (const auto& a : group)
    if (a.rows() != d || a.cols() != d) throw ValidationError("group element has wrong shape");
  auto contains = [&](const RationalMatrix& m) { return std::find(group.begin(), group.end(), m) != group.end(); };
  const auto id = RationalMatrix::identity(d);
  if (!contains(id)) throw ValidationError("group does not contain the identity");
  for (const auto& a : group) {
    bool has_inverse = false;
    for (const auto& b : group) {
      if (!contains(a * b)) throw ValidationError("group is not closed under multiplication");
      has_inverse = has_inverse || a * b == id;
    }
    if (!has_inverse) throw ValidationError("group element has no inverse in the group");
  }
}

FreeTensor invariant_projector(const std::vector<RationalMatrix>& group, const FreeTensor& x) {
  require_finite_group(group, x.dim());
  const int d = x.dim();
  FreeTensor out(d);
  for (const auto& a : group) {
    std::vector<FreeTensor> images;
    for (int i = 0; i < d; ++i) {
      FreeTensor img(d);
      for (int j = 0; j < d; ++j)
        img.add(Word{static_cast<Letter>(j + 1)}, a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      images.push_back(std::move(img));
    }
    out += letter_map_extend(LetterMap(d, std::move(images)), x, LetterMapMode::multiplicative);
  }
  return out *= Rational(1) / static_cast<long>(group.size());
}

}  // namespace pathvar
