#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "pathvar/free_tensor.hpp"

namespace pathvar {

/// Lyndon words of the given length over {1..dim}, in lexicographic order (Duval).
std::vector<Word> lyndon_words(int dim, std::size_t length);

bool is_lyndon(const Word& w);

/// Binary bracket tree; a leaf holds a letter.
struct Bracket {
  Letter letter = 0;
  std::shared_ptr<const Bracket> left, right;

  bool is_leaf() const { return !left; }
};

/// Standard bracketing: w = uv with v the longest proper Lyndon suffix, P(w) = [P(u), P(v)].
std::shared_ptr<const Bracket> standard_bracketing(const Word& lyndon);

/// Expansion of a bracket into the tensor algebra ([a,b] = ab - ba).
FreeTensor expand(const Bracket& b, int dim);

/// Coefficients of a homogeneous Lie element in the Lyndon basis, lex order.
/// Throws if `x` is not in the span of the Lyndon brackets of its degree.
std::vector<std::pair<Word, Rational>> lyndon_coordinates(const FreeTensor& x, std::size_t degree);

}  // namespace pathvar
