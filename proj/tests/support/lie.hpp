#pragma once

#include "pathvar/lyndon.hpp"
#include "pathvar/series.hpp"
#include "support/oracles.hpp"

namespace gen {

// Random Lie polynomial: random multiples of Lyndon brackets of degree 1..level.
inline pathvar::TruncatedSeries random_lie(Random& rnd, int dim, int level, int terms_per_level = 2) {
  pathvar::FreeTensor out(dim);
  for (int k = 1; k <= level; ++k) {
    const auto lyndon = pathvar::lyndon_words(dim, static_cast<std::size_t>(k));
    if (lyndon.empty()) continue;
    for (int t = 0; t < terms_per_level; ++t) {
      const auto& w = lyndon[static_cast<std::size_t>(rnd.uniform(0, static_cast<int>(lyndon.size()) - 1))];
      out.add_scaled(pathvar::expand(*pathvar::standard_bracketing(w), dim), rnd.rational());
    }
  }
  return pathvar::TruncatedSeries::from_tensor(out, level);
}

}  // namespace gen
