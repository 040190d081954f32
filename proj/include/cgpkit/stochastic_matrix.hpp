/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_STOCHASTIC_MATRIX_HPP
#define CGPKIT_STOCHASTIC_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgpkit/errors.hpp"
#include "cgpkit/probability_vector.hpp"

namespace cgpkit {

/// Real nonnegative square matrix whose columns sum to one; the
/// bi-stochastic flag is certified at construction (rows also sum to one).
class StochasticMatrix {
public:
  StochasticMatrix(int n, std::vector<double> row_major)
      : n_(n), a_(std::move(row_major)) {
    if (n < 1) throw BadParameter("stochastic matrix dimension must be positive");
    if (a_.size() != static_cast<std::size_t>(n) * n) {
      throw DimensionMismatch("stochastic matrix entry count does not match shape");
    }
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!std::isfinite(a_[k])) throw BadParameter("stochastic matrix entry is not finite");
      if (a_[k] < 0.0) {
        if (a_[k] < -kEntryTolerance) {
          throw BadParameter("stochastic matrix entry (" + std::to_string(k / n) +
                             ", " + std::to_string(k % n) +
                             ") is negative: " + std::to_string(a_[k]));
        }
        a_[k] = 0.0;
      }
    }
    bi_ = true;
    for (int j = 0; j < n_; ++j) {
      double col = 0.0;
      for (int i = 0; i < n_; ++i) col += (*this)(i, j);
      if (std::abs(col - 1.0) > kSumTolerance) {
        throw BadParameter("column " + std::to_string(j) + " sums to " +
                           std::to_string(col) + ", expected 1");
      }
    }
    for (int i = 0; i < n_; ++i) {
      double row = 0.0;
      for (int j = 0; j < n_; ++j) row += (*this)(i, j);
      if (std::abs(row - 1.0) > kSumTolerance) {
        bi_ = false;
        break;
      }
    }
  }

  static StochasticMatrix identity(int n) {
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1.0;
    return StochasticMatrix(n, std::move(a));
  }

  /// (1/N) P with P the all-ones matrix.
  static StochasticMatrix uniform(int n) {
    return StochasticMatrix(n, std::vector<double>(static_cast<std::size_t>(n) * n, 1.0 / n));
  }

  int dim() const noexcept { return n_; }
  bool bi_stochastic() const noexcept { return bi_; }

  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  const std::vector<double>& entries() const noexcept { return a_; }

  ProbabilityVector column(int j) const {
    std::vector<double> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return ProbabilityVector(std::move(c));
  }

  /// Row as a distribution; only meaningful when rows sum to one.
  ProbabilityVector row(int i) const {
    std::vector<double> r(n_);
    for (int j = 0; j < n_; ++j) r[j] = (*this)(i, j);
    return ProbabilityVector(std::move(r));
  }

  /// Transpose; stochastic again only in the bi-stochastic case.
  StochasticMatrix transpose() const {
    if (!bi_) throw NotBiStochastic("transpose of a one-sided stochastic matrix");
    std::vector<double> t(a_.size());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t[static_cast<std::size_t>(j) * n_ + i] = (*this)(i, j);
    return StochasticMatrix(n_, std::move(t));
  }

  /// B lambda, again a probability vector.
  ProbabilityVector apply(const ProbabilityVector& lambda) const {
    if (lambda.dim() != n_) throw DimensionMismatch("B lambda dimension mismatch");
    std::vector<double> out(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      double s = 0.0;
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * lambda[j];
      out[i] = s;
    }
    return ProbabilityVector(std::move(out));
  }

private:
  int n_;
  std::vector<double> a_;
  bool bi_;
};

} // namespace cgpkit

#endif // CGPKIT_STOCHASTIC_MATRIX_HPP
