/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_DENSITY_MATRIX_HPP
#define CGPKIT_DENSITY_MATRIX_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/eigh.hpp"
#include "cgpkit/errors.hpp"
#include "cgpkit/probability_vector.hpp"

namespace cgpkit {

/// Hermitian, unit-trace, positive-semidefinite matrix.
///
/// make() runs the full certificate including an eigenvalue check;
/// channel outputs use the cheaper trusted() path, which verifies
/// Hermiticity and trace but takes positivity from the construction
/// (a completely positive map cannot break it).
class DensityMatrix {
public:
  static DensityMatrix make(ComplexMatrix m) {
    DensityMatrix rho(std::move(m));
    const auto eig = eigh(rho.m_);
    if (eig.eigenvalues.front() < -1e-9) {
      throw BadParameter("density matrix has eigenvalue " +
                         std::to_string(eig.eigenvalues.front()));
    }
    return rho;
  }

  static DensityMatrix trusted(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

  static DensityMatrix diagonal(const ProbabilityVector& lambda) {
    ComplexMatrix m(lambda.dim(), lambda.dim());
    for (int i = 0; i < lambda.dim(); ++i) m(i, i) = lambda[i];
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix pure(const std::vector<Complex>& amplitudes) {
    const int n = static_cast<int>(amplitudes.size());
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return make(std::move(m));
  }

  static DensityMatrix maximally_mixed(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0 / n;
    return DensityMatrix(std::move(m));
  }

  int dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

  /// Diagonal in the computational basis, as a probability vector.
  ProbabilityVector diagonal_distribution() const {
    std::vector<double> d(dim());
    for (int i = 0; i < dim(); ++i) d[i] = m_(i, i).real();
    return ProbabilityVector(std::move(d));
  }

private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("density matrix must be square");
    if (!m_.all_finite()) throw BadParameter("density matrix has non-finite entries");
    const double h = hermiticity_defect(m_);
    if (h > 1e-10) {
      throw NotHermitian("density matrix: max |A - A^H| = " + std::to_string(h));
    }
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > 1e-10) {
      throw BadParameter("density matrix trace is " + std::to_string(tr));
    }
  }

  ComplexMatrix m_;
};

} // namespace cgpkit

#endif // CGPKIT_DENSITY_MATRIX_HPP
