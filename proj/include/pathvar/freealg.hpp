#pragma once

#include <utility>
#include <vector>

#include "pathvar/free_tensor.hpp"

namespace pathvar {

// Word-level kernels. Results are memoized per thread.

/// u ⧢ v, computed through the halfshuffle recursion.
const TermMap& word_shuffle(const Word& u, const Word& v);
/// u ≻ v for nonempty words: the last letter comes from v.
TermMap word_half_shuffle_right(const Word& u, const Word& v);
/// u ≺ v for nonempty words: the first letter comes from u.
TermMap word_half_shuffle_left(const Word& u, const Word& v);

// Tensor-level operations.

FreeTensor concat_product(const FreeTensor& x, const FreeTensor& y);

/// Δ_• x as a flat list of (left, right) pairs; the coefficient sits on the left factor.
std::vector<std::pair<FreeTensor, FreeTensor>> deconcat(const FreeTensor& x);

FreeTensor shuffle(const FreeTensor& x, const FreeTensor& y);

/// x ≻ y. Both arguments must have zero e-coefficient.
FreeTensor half_shuffle_right(const FreeTensor& x, const FreeTensor& y);
/// x ≺ y. Both arguments must have zero e-coefficient.
FreeTensor half_shuffle_left(const FreeTensor& x, const FreeTensor& y);

/// Signed reversal: i1...in -> (-1)^n in...i1.
FreeTensor antipode(const FreeTensor& x);

/// A linear map from letters {1..source_dim} into T(R^target_dim).
struct LetterMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<FreeTensor> images;  // images[i-1] is the image of letter i

  LetterMap(int target, std::vector<FreeTensor> imgs);

  const FreeTensor& operator()(Letter a) const { return images.at(a - 1u); }
  bool images_in_positive_degree() const;
  static LetterMap identity(int dim);
};

enum class LetterMapMode {
  multiplicative,  // i1...in -> A(i1)•...•A(in)
  lambda,          // Λ_B: e -> e, i -> B(i), wi -> Λ_B(w) ≻ B(i)
};

FreeTensor letter_map_extend(const LetterMap& map, const FreeTensor& x, LetterMapMode mode);

}  // namespace pathvar
