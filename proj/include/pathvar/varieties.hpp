#pragma once

#include <optional>
#include <vector>

#include "pathvar/ideals.hpp"
#include "pathvar/lyndon.hpp"
#include "pathvar/paths.hpp"

namespace pathvar {

/// The path variety cut out by the closure of `generators`, certified up to degree `level`.
struct VarietySpec {
  int dim = 1;
  std::vector<FreeTensor> generators;
  ClosureType closure = ClosureType::shuffle;
  int level = 1;

  GradedBasis basis() const;
};

/// Membership is only ever claimed up to the certificate degree.
struct MembershipResult {
  bool member = false;
  int certified_level = 0;
  std::optional<std::size_t> first_failing_row;  // index into basis.rows()
};

MembershipResult in_variety(const PiecewisePolyPath& x, const GradedBasis& basis);
MembershipResult in_variety(const PiecewisePolyPath& x, const VarietySpec& spec);

/// Loops of order k: all words of degree 1..k, shuffle closure, level k.
VarietySpec loops_variety(int dim, int k);

/// Paths whose increment lies in {p = 0}. Constant terms enter as e-coefficients.
/// `level` defaults to the largest total degree of p.
VarietySpec increments_variety(const PolynomialMap& p, std::optional<int> level = std::nullopt);

enum class RankSide { left, right, two_sided };

std::string to_string(RankSide s);
RankSide parse_rank_side(const std::string& name);

struct RankSpec {
  std::vector<FreeTensor> tensors;
  std::size_t bound = 0;  // k
  RankSide side = RankSide::left;
  int level = 1;
  std::size_t columns = 50;  // L

  void validate() const;
};

struct RankResult {
  bool passed = false;  // rank <= bound over the enumerated columns
  std::size_t rank = 0;
  std::size_t columns_used = 0;
  int certified_level = 0;
};

/// Operator contexts: sequences of halfshuffles with words applied to a hole.
struct ContextStep {
  enum Op { hole_succ_word, word_succ_hole, hole_prec_word, word_prec_hole } op;
  Word word;
};
using Context = std::vector<ContextStep>;

/// The first `max_columns` contexts of added degree <= budget, in canonical order.
std::vector<Context> enumerate_contexts(int dim, RankSide side, std::size_t budget, std::size_t max_columns);
FreeTensor apply_context(const Context& c, const FreeTensor& x);

/// rank(<σ(X), context_l(x_i)>)_{i,l} <= k, exact.
RankResult rank_test(const PiecewisePolyPath& x, const RankSpec& spec);

RankResult subspace_test(const PiecewisePolyPath& x, std::size_t m, int level, std::size_t columns = 50);
RankResult hypersurface_test(const PiecewisePolyPath& x, int m, int level, std::size_t columns = 50);
RankResult sphere_or_hyperplane_test(const PiecewisePolyPath& x, int level, std::size_t columns = 50);

/// φ of every monomial of total degree 1..m in d variables (degree, then exponent order).
std::vector<FreeTensor> shuffle_monomials(int dim, int max_degree);

/// Piecewise-linear path whose log-signature truncated at the Lie element's level equals it.
PiecewisePolyPath realize_log_signature(const LiePoly& l);

/// Commutator gadget for c * P(bracket): its log-signature vanishes below the bracket's degree.
PiecewisePolyPath bracket_gadget(const Bracket& b, const Rational& c, int dim);

/// For a linear path with increment v: <σ, i1...in> = v_{i1}...v_{in}/n!.
MultiPoly linear_signature_polynomial(const FreeTensor& x);

}  // namespace pathvar
