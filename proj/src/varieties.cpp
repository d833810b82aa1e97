#include "pathvar/varieties.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathvar {

GradedBasis VarietySpec::basis() const {
  for (const auto& g : generators)
    if (g.dim() != dim) throw ValidationError("variety generator alphabet mismatch");
  return ideal_basis(generators, closure, level, dim);
}

MembershipResult in_variety(const PiecewisePolyPath& x, const GradedBasis& basis) {
  if (x.dim() != basis.dim())
    throw ValidationError("in_variety: path dimension " + std::to_string(x.dim()) + " does not match alphabet " +
                          std::to_string(basis.dim()));
  MembershipResult out;
  out.certified_level = basis.level();
  const TruncatedSeries sig = signature(x, basis.level());
  const auto rows = basis.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (pair(sig, rows[i]) != 0) {
      out.first_failing_row = i;
      return out;
    }
  out.member = true;
  return out;
}

MembershipResult in_variety(const PiecewisePolyPath& x, const VarietySpec& spec) { return in_variety(x, spec.basis()); }

VarietySpec loops_variety(int dim, int k) {
  if (k < 1) throw ValidationError("loops_variety: order must be at least 1");
  VarietySpec spec{dim, {}, ClosureType::shuffle, k};
  for (const auto& w : words_up_to(dim, static_cast<std::size_t>(k)))
    if (!w.empty()) spec.generators.push_back(FreeTensor::word(dim, w));
  return spec;
}

VarietySpec increments_variety(const PolynomialMap& p, std::optional<int> level) {
  VarietySpec spec{p.source_dim, {}, ClosureType::shuffle, 1};
  int max_degree = 1;
  for (const auto& comp : p.components) {
    const Rational c0 = comp.constant_term();
    MultiPoly centered = comp - MultiPoly::constant(p.source_dim, c0);
    FreeTensor g = phi(centered);
    g.add(Word{}, c0);
    if (g.is_zero()) continue;  // the zero polynomial constrains nothing
    max_degree = std::max(max_degree, comp.total_degree());
    spec.generators.push_back(std::move(g));
  }
  spec.level = level.value_or(max_degree);
  return spec;
}

// ---------------------------------------------------------------------------

std::string to_string(RankSide s) {
  switch (s) {
    case RankSide::left: return "left";
    case RankSide::right: return "right";
    case RankSide::two_sided: return "two_sided";
  }
  return "?";
}

RankSide parse_rank_side(const std::string& name) {
  if (name == "left") return RankSide::left;
  if (name == "right") return RankSide::right;
  if (name == "two_sided" || name == "two-sided") return RankSide::two_sided;
  throw ValidationError("unknown side '" + name + "'");
}

void RankSpec::validate() const {
  if (tensors.empty()) throw ValidationError("rank spec needs at least one tensor");
  const int dim = tensors.front().dim();
  for (const auto& t : tensors) {
    if (t.dim() != dim) throw ValidationError("rank spec tensors disagree on alphabet");
    if (t.is_zero()) throw ValidationError("rank spec tensors must be nonzero");
    if (t.constant_term() != 0) throw ValidationError("rank spec tensors must lie in T^{>=1}");
    if (t.degree() > static_cast<std::size_t>(level)) throw ValidationError("rank spec tensor exceeds level");
  }
  if (bound > tensors.size()) throw ValidationError("rank bound k exceeds the number of tensors");
  if (columns < 1) throw ValidationError("column budget must be positive");
}

std::vector<Context> enumerate_contexts(int dim, RankSide side, std::size_t budget, std::size_t max_columns) {
  std::vector<ContextStep::Op> ops;
  if (side != RankSide::right) ops.insert(ops.end(), {ContextStep::hole_succ_word, ContextStep::word_succ_hole});
  if (side != RankSide::left) ops.insert(ops.end(), {ContextStep::hole_prec_word, ContextStep::word_prec_hole});

  std::vector<std::vector<Context>> by_degree{{Context{}}};
  std::size_t total = 1;
  for (std::size_t deg = 1; deg <= budget && total < max_columns; ++deg) {
    std::vector<Context> level;
    for (std::size_t j = 1; j <= deg && total < max_columns; ++j) {
      const auto words = words_of_degree(dim, j);
      for (const auto& base : by_degree[deg - j]) {
        for (auto op : ops)
          for (const auto& w : words) {
            if (total >= max_columns) break;
            Context c = base;
            c.push_back({op, w});
            level.push_back(std::move(c));
            ++total;
          }
      }
    }
    by_degree.push_back(std::move(level));
  }
  std::vector<Context> out;
  for (auto& lv : by_degree)
    for (auto& c : lv) out.push_back(std::move(c));
  if (out.size() > max_columns) out.resize(max_columns);
  return out;
}

FreeTensor apply_context(const Context& c, const FreeTensor& x) {
  FreeTensor cur = x;
  for (const auto& step : c) {
    const FreeTensor w = FreeTensor::word(x.dim(), step.word);
    switch (step.op) {
      case ContextStep::hole_succ_word: cur = half_shuffle_right(cur, w); break;
      case ContextStep::word_succ_hole: cur = half_shuffle_right(w, cur); break;
      case ContextStep::hole_prec_word: cur = half_shuffle_left(cur, w); break;
      case ContextStep::word_prec_hole: cur = half_shuffle_left(w, cur); break;
    }
  }
  return cur;
}

RankResult rank_test(const PiecewisePolyPath& x, const RankSpec& spec) {
  spec.validate();
  if (x.dim() != spec.tensors.front().dim()) throw ValidationError("rank_test: path dimension mismatch");
  std::size_t max_deg = 0;
  for (const auto& t : spec.tensors) max_deg = std::max(max_deg, t.degree());
  const auto contexts =
      enumerate_contexts(x.dim(), spec.side, static_cast<std::size_t>(spec.level) - max_deg, spec.columns);
  const TruncatedSeries sig = signature(x, spec.level);
  RationalMatrix m(spec.tensors.size(), contexts.size());
  for (std::size_t i = 0; i < spec.tensors.size(); ++i)
    for (std::size_t l = 0; l < contexts.size(); ++l) m(i, l) = pair(sig, apply_context(contexts[l], spec.tensors[i]));
  RankResult out;
  out.rank = rank(std::move(m));
  out.passed = out.rank <= spec.bound;
  out.columns_used = contexts.size();
  out.certified_level = spec.level;
  return out;
}

RankResult subspace_test(const PiecewisePolyPath& x, std::size_t m, int level, std::size_t columns) {
  RankSpec spec;
  for (int i = 1; i <= x.dim(); ++i) spec.tensors.push_back(FreeTensor::letter(x.dim(), static_cast<Letter>(i)));
  spec.bound = std::min(m, spec.tensors.size());
  spec.level = level;
  spec.columns = columns;
  return rank_test(x, spec);
}

std::vector<FreeTensor> shuffle_monomials(int dim, int max_degree) {
  std::vector<FreeTensor> out;
  // exponent vectors of total degree deg, in descending lexicographic order (x1^deg first)
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<std::vector<int>> exps;
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, std::size_t j, int left) -> void {
      if (j + 1 == e.size()) {
        e[j] = left;
        exps.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[j] = k;
        self(self, j + 1, left - k);
      }
    };
    rec(rec, 0, deg);
    for (const auto& ex : exps) {
      MultiPoly mono(dim);
      mono.add(ex, 1);
      out.push_back(phi(mono));
    }
  }
  return out;
}

RankResult hypersurface_test(const PiecewisePolyPath& x, int m, int level, std::size_t columns) {
  RankSpec spec;
  spec.tensors = shuffle_monomials(x.dim(), m);
  spec.bound = spec.tensors.size() - 1;
  spec.level = level;
  spec.columns = columns;
  return rank_test(x, spec);
}

RankResult sphere_or_hyperplane_test(const PiecewisePolyPath& x, int level, std::size_t columns) {
  RankSpec spec;
  FreeTensor squares(x.dim());
  for (int i = 1; i <= x.dim(); ++i) {
    const auto a = static_cast<Letter>(i);
    spec.tensors.push_back(FreeTensor::letter(x.dim(), a));
    squares.add(Word{a, a}, 1);
  }
  spec.tensors.push_back(std::move(squares));
  spec.bound = static_cast<std::size_t>(x.dim());
  spec.level = level;
  spec.columns = columns;
  return rank_test(x, spec);
}

// ---------------------------------------------------------------------------

PiecewisePolyPath bracket_gadget(const Bracket& b, const Rational& c, int dim) {
  if (b.is_leaf()) {
    std::vector<Rational> inc(static_cast<std::size_t>(dim));
    inc.at(b.letter - 1u) = c;
    return PiecewisePolyPath::piecewise_linear(dim, {inc});
  }
  // a b a^{-1} b^{-1}: log = [log a, log b] + higher order terms
  const PiecewisePolyPath u = bracket_gadget(*b.left, c, dim);
  const PiecewisePolyPath v = bracket_gadget(*b.right, 1, dim);
  return concat(concat(u, v), concat(reverse(u), reverse(v)));
}

PiecewisePolyPath realize_log_signature(const LiePoly& l) {
  const int dim = l.dim(), level = l.level();
  const TruncatedSeries& target = l.series();

  std::vector<Rational> first(static_cast<std::size_t>(dim));
  bool moves = false;
  for (int i = 1; i <= dim; ++i) {
    first[static_cast<std::size_t>(i - 1)] = target.coeff(Word{static_cast<Letter>(i)});
    moves = moves || first[static_cast<std::size_t>(i - 1)] != 0;
  }
  PiecewisePolyPath path(dim);
  if (moves) path = PiecewisePolyPath::piecewise_linear(dim, {first});

  for (int k = 2; k <= level; ++k) {
    const TruncatedSeries current = log_conc(signature(path, k));
    FreeTensor defect = target.as_tensor().homogeneous_part(static_cast<std::size_t>(k));
    defect -= current.as_tensor().homogeneous_part(static_cast<std::size_t>(k));
    for (const auto& [w, c] : lyndon_coordinates(defect, static_cast<std::size_t>(k)))
      path = concat(path, bracket_gadget(*standard_bracketing(w), c, dim));
  }

  if (!(log_conc(signature(path, level)) == target))
    throw std::logic_error("realize_log_signature: realized path misses the target log-signature");
  return path;
}

MultiPoly linear_signature_polynomial(const FreeTensor& x) {
  const int dim = x.dim();
  MultiPoly out(dim);
  for (const auto& [w, c] : x.terms()) {
    Exponents e(static_cast<std::size_t>(dim), 0);
    Rational fact = 1;
    for (std::size_t k = 0; k < w.degree(); ++k) {
      ++e[w[k] - 1u];
      fact *= static_cast<long>(k + 1);
    }
    out.add(e, c / fact);
  }
  return out;
}

}  // namespace pathvar
