/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_PROBABILITY_VECTOR_HPP
#define CGPKIT_PROBABILITY_VECTOR_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgpkit/errors.hpp"

namespace cgpkit {

inline constexpr double kEntryTolerance = 1e-12; // negative entries above this are clamped to 0
inline constexpr double kSumTolerance = 1e-10;   // |sum - 1| must stay below this

/// Nonnegative vector summing to one. Construction clamps roundoff-negative
/// entries and rejects anything worse.
class ProbabilityVector {
public:
  explicit ProbabilityVector(std::vector<double> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty()) {
      throw BadParameter("probability vector must have at least one entry");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      double& x = entries_[i];
      if (!std::isfinite(x)) {
        throw BadParameter("probability vector entry " + std::to_string(i) +
                           " is not finite");
      }
      if (x < 0.0) {
        if (x < -kEntryTolerance) {
          throw BadParameter("probability vector entry " + std::to_string(i) +
                             " is negative: " + std::to_string(x));
        }
        x = 0.0;
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
      throw BadParameter("probability vector entries sum to " +
                         std::to_string(sum) + ", expected 1");
    }
  }

  static ProbabilityVector uniform(int n) {
    if (n < 1) throw BadParameter("uniform distribution needs n >= 1");
    return ProbabilityVector(std::vector<double>(n, 1.0 / n));
  }

  static ProbabilityVector point_mass(int n, int i) {
    if (n < 1 || i < 0 || i >= n) throw BadParameter("point mass index out of range");
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    return ProbabilityVector(std::move(e));
  }

  int dim() const noexcept { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[i]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

private:
  std::vector<double> entries_;
};

} // namespace cgpkit

#endif // CGPKIT_PROBABILITY_VECTOR_HPP
