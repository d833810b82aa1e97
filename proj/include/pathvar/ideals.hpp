#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathvar/freealg.hpp"
#include "pathvar/linalg.hpp"
#include "pathvar/poly.hpp"
#include "pathvar/series.hpp"

namespace pathvar {

enum class ClosureType {
  shuffle,     // x ⧢ w
  right_half,  // x ≻ w and w ≻ x
  left_half,   // x ≺ w and w ≺ x
  both_half,   // all four halfshuffle products
  linear,      // plain span, no closure (output of shift/power constructions)
};

std::string to_string(ClosureType c);
ClosureType parse_closure(const std::string& name);
bool uses_halfshuffle(ClosureType c);

/// Row-reduced basis of a subspace of T^{<=N}(R^d).
///
/// Rows are in reduced row echelon form with respect to graded-lex leading
/// words: each row is monic on its pivot (its largest word) and no pivot
/// word appears in any other row. The representation is therefore canonical
/// for the span.
class GradedBasis {
 public:
  GradedBasis(int dim, int level, ClosureType closure);

  int dim() const { return dim_; }
  int level() const { return level_; }
  ClosureType closure() const { return closure_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Rows ordered by pivot word.
  std::vector<FreeTensor> rows() const;
  std::vector<Word> pivot_words() const;
  /// Number of pivots of each degree 0..N.
  std::vector<std::size_t> pivot_counts() const;

  /// Remainder of x after elimination against the rows.
  FreeTensor reduce(const FreeTensor& x) const;
  /// Adds x to the span. Returns the new monic row, or nothing if x was already in the span.
  std::optional<FreeTensor> insert(const FreeTensor& x);

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.dim_ == b.dim_ && a.level_ == b.level_ && a.rows_ == b.rows_;
  }

 private:
  int dim_;
  int level_;
  ClosureType closure_;
  std::map<Word, FreeTensor> rows_;  // pivot -> row
};

/// The closure of `generators` under `closure`, truncated at degree `level`.
///
/// Products are only formed when every term of the result fits in degree
/// `level`; since all products are degree-additive this gives I ∩ T^{<=N} for
/// homogeneous generators. Generators above the level are rejected.
/// `dim` is only needed when `generators` is empty.
GradedBasis ideal_basis(const std::vector<FreeTensor>& generators, ClosureType closure, int level, int dim = 1);

/// True if one more closure round adds nothing.
bool is_saturated(const GradedBasis& basis);

struct MemberResult {
  bool member = false;
  std::vector<Rational> coords;  // coefficient per row (rows() order); empty if not a member
};

MemberResult member(const FreeTensor& x, const GradedBasis& basis);

/// φ: polynomial with zero constant term -> shuffle algebra, x_j -> letter j.
FreeTensor phi(const MultiPoly& p);

/// M_p = Λ_{φ(p)}: tensors over the target alphabet of p -> tensors over its source alphabet.
FreeTensor m_p(const PolynomialMap& p, const FreeTensor& x);

enum class ShiftSide {
  left,   // X ⊔ V: x -> Σ <A g, x1> x2
  right,  // V ⊔ X: x -> Σ x1 <A g, x2>
};

/// Maps every row through the deconcatenation shift by the grouplike g and re-reduces.
GradedBasis shift_ideal(const GradedBasis& basis, const TruncatedSeries& g, ShiftSide side = ShiftSide::left);

/// Σ over n-fold deconcatenations of x1 ⧢ ... ⧢ xn.
FreeTensor power_ideal(const FreeTensor& x, int n);

/// As power_ideal, with the k-th factor relabeled into letters {(k-1)d+1 .. kd}.
FreeTensor multi_path_ideal(const FreeTensor& x, int n);

/// Rows of `basis` mapped through power_ideal; X lies in its zero set iff X^{⊔n} is in the original.
GradedBasis power_basis(const GradedBasis& basis, int n);

/// Validates that `group` is a finite matrix group acting on R^d.
void require_finite_group(const std::vector<RationalMatrix>& group, int dim);

/// (1/|G|) Σ_{A in G} A^T x, with A^T acting multiplicatively on words.
FreeTensor invariant_projector(const std::vector<RationalMatrix>& group, const FreeTensor& x);

}  // namespace pathvar
