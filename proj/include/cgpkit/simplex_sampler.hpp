/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_SIMPLEX_SAMPLER_HPP
#define CGPKIT_SIMPLEX_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "cgpkit/errors.hpp"
#include "cgpkit/probability_vector.hpp"
#include "cgpkit/rng.hpp"

namespace cgpkit {

/// Uniform sampler on the probability simplex: N unit-rate exponentials
/// normalized by their sum, i.e. Dirichlet(1, ..., 1), which is exactly the
/// flat measure Gamma(N) delta(1 - sum) prod d lambda_j.
///
/// Sample k is a pure function of (seed, k): at(k) never touches the
/// counter, so disjoint index ranges can be fanned out across workers
/// without changing any draw.
class SimplexSampler {
public:
  SimplexSampler(int dim, std::uint64_t seed, std::uint64_t counter = 0)
      : dim_(dim), seed_(seed), counter_(counter) {
    if (dim < 2) throw BadParameter("simplex sampler needs dim >= 2");
  }

  ProbabilityVector at(std::uint64_t index) const {
    KeyedStream stream(seed_, index);
    std::vector<double> e(dim_);
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i) {
      e[i] = stream.exponential();
      sum += e[i];
    }
    for (int i = 0; i < dim_; ++i) e[i] /= sum;
    return ProbabilityVector(std::move(e));
  }

  ProbabilityVector next() { return at(counter_++); }

  int dim() const noexcept { return dim_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

private:
  int dim_;
  std::uint64_t seed_;
  std::uint64_t counter_;
};

} // namespace cgpkit

#endif // CGPKIT_SIMPLEX_SAMPLER_HPP
