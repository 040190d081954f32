/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_BISTOCHASTIC_HPP
#define CGPKIT_BISTOCHASTIC_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cgpkit/errors.hpp"
#include "cgpkit/rng.hpp"
#include "cgpkit/simplex_sampler.hpp"
#include "cgpkit/stochastic_matrix.hpp"

namespace cgpkit {

/// Sinkhorn iteration: alternately normalize rows and columns until both
/// sum to one within tol. Converges for entrywise-positive input; a zero
/// row or column (or a bad support pattern) is reported as NoConvergence
/// rather than looping forever.
inline StochasticMatrix sinkhorn_bistochastic(std::vector<double> entries, int n,
                                              double tol = 1e-12,
                                              int max_iterations = 10000) {
  if (n < 1) throw BadParameter("sinkhorn needs a positive dimension");
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw DimensionMismatch("sinkhorn entry count does not match shape");
  }
  for (double x : entries) {
    if (!(x >= 0.0)) throw BadParameter("sinkhorn needs nonnegative entries");
  }

  const auto at = [&entries, n](int i, int j) -> double& {
    return entries[static_cast<std::size_t>(i) * n + j];
  };

  for (int iter = 0; iter < max_iterations; ++iter) {
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += at(i, j);
      if (row < 1e-300) throw NoConvergence("sinkhorn: row " + std::to_string(i) + " has no mass");
      for (int j = 0; j < n; ++j) at(i, j) /= row;
    }
    double worst_col = 0.0;
    for (int j = 0; j < n; ++j) {
      double col = 0.0;
      for (int i = 0; i < n; ++i) col += at(i, j);
      if (col < 1e-300) throw NoConvergence("sinkhorn: column " + std::to_string(j) + " has no mass");
      worst_col = std::max(worst_col, std::abs(col - 1.0));
      for (int i = 0; i < n; ++i) at(i, j) /= col;
    }
    if (worst_col <= tol) {
      // columns exact after the last pass; rows off by at most ~tol
      double worst_row = 0.0;
      for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += at(i, j);
        worst_row = std::max(worst_row, std::abs(row - 1.0));
      }
      if (worst_row <= tol) return StochasticMatrix(n, std::move(entries));
    }
  }
  throw NoConvergence("sinkhorn did not reach tolerance in " +
                      std::to_string(max_iterations) + " iterations");
}

/// Bi-stochastic matrix from Sinkhorn-normalizing a strictly positive
/// random matrix.
inline StochasticMatrix random_positive_bistochastic(int n, std::uint64_t seed) {
  if (n < 1) throw BadParameter("dimension must be positive");
  KeyedStream stream(seed, 0x73696e6bULL);
  std::vector<double> entries(static_cast<std::size_t>(n) * n);
  for (double& x : entries) x = 0.05 + stream.uniform();
  return sinkhorn_bistochastic(std::move(entries), n);
}

/// Bi-stochastic matrix as a convex mixture of random permutation matrices
/// with Dirichlet(1, ..., 1) weights.
inline StochasticMatrix random_permutation_mixture(int n, int num_permutations,
                                                   std::uint64_t seed) {
  if (n < 1) throw BadParameter("dimension must be positive");
  if (num_permutations < 1) throw BadParameter("mixture needs at least one permutation");

  std::vector<double> weights;
  if (num_permutations == 1) {
    weights.push_back(1.0);
  } else {
    weights = SimplexSampler(num_permutations, mix64(seed ^ 0x7065726dULL)).at(0).entries();
  }

  std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < num_permutations; ++k) {
    KeyedStream stream(seed, 0x70657278ULL + static_cast<std::uint64_t>(k));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) { // Fisher-Yates
      const int j = static_cast<int>(stream.uniform_index(static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[i], perm[j]);
    }
    for (int i = 0; i < n; ++i) {
      entries[static_cast<std::size_t>(i) * n + perm[i]] += weights[k];
    }
  }
  return StochasticMatrix(n, std::move(entries));
}

} // namespace cgpkit

#endif // CGPKIT_BISTOCHASTIC_HPP
