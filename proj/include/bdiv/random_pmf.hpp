#pragma once

#include <random>

#include "bdiv/pmf.hpp"

namespace bdiv {

struct RandomPmfOptions {
  /// Chance that any single entry is forced to exactly 0.
  double zero_probability = 0.0;
  /// Chance that the whole PMF is a point mass on one random letter.
  double one_hot_probability = 0.0;
};

/// Random PMF of size n from normalised exponential draws (a flat Dirichlet),
/// optionally sprinkled with exact zeros. At least one entry stays positive.
template <typename Rng>
Pmf random_pmf(Rng& rng, Index n, const RandomPmfOptions& options = {}) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> draw(1.0);
  std::uniform_int_distribution<Index> letter(0, n - 1);
  VectorX<double> v = VectorX<double>::Zero(n);
  if (unit(rng) < options.one_hot_probability) {
    v[letter(rng)] = 1.0;
    return Pmf(std::move(v));
  }
  for (Index i = 0; i < n; ++i) v[i] = unit(rng) < options.zero_probability ? 0.0 : draw(rng);
  if (v.sum() <= 0.0) v[letter(rng)] = 1.0;
  v /= v.sum();
  return Pmf(std::move(v));
}

}  // namespace bdiv
