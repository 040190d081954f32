/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_EIGH_HPP
#define CGPKIT_EIGH_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/errors.hpp"

namespace cgpkit {

struct EighResult {
  std::vector<double> eigenvalues; // ascending
  ComplexMatrix eigenvectors;      // column k pairs with eigenvalues[k]
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

} // namespace detail

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi sweeps.
///
/// Each sweep annihilates every off-diagonal pair (p, q) with a complex
/// plane rotation; the phase of a_pq is folded into the rotation so the
/// 2x2 subproblem reduces to the real symmetric case. Converges to an
/// off-diagonal norm of 1e-12 relative to the matrix scale; the sweep
/// budget is 100 (quadratic convergence makes ~10 typical for n = 16).
inline EighResult eigh(const ComplexMatrix& input) {
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kOffNormTol = 1e-12;
  static constexpr int kMaxSweeps = 100;

  if (input.rows() != input.cols()) {
    throw DimensionMismatch("eigh needs a square matrix");
  }
  if (!input.all_finite()) {
    throw NotHermitian("eigh: matrix has non-finite entries");
  }
  const int n = input.rows();
  const double defect = hermiticity_defect(input);
  if (defect > kHermitianTol) {
    throw NotHermitian("eigh: max |A - A^H| = " + std::to_string(defect));
  }

  // Work on the Hermitian average; diagonal becomes exactly real.
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
    }
    a(i, i) = Complex(a(i, i).real(), 0.0);
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, a.frobenius_norm());
  const double target = kOffNormTol * scale;

  if (n > 1) {
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
      if (detail::off_diagonal_norm(a) <= target) {
        converged = true;
        break;
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double r = std::abs(a(p, q));
          if (r <= target / (static_cast<double>(n) * n)) continue;

          const double phase = std::arg(a(p, q));
          const Complex eip(std::cos(phase), std::sin(phase));
          const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
          const double t =
              (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          // R differs from the identity only at
          //   R(p,p) = c, R(p,q) = s e^{i phase}, R(q,p) = -s e^{-i phase}, R(q,q) = c.
          const Complex rpq = s * eip;
          const Complex rqp = -s * std::conj(eip);

          // A <- R^H A R: rows p and q, then columns p and q.
          for (int j = 0; j < n; ++j) {
            const Complex apj = a(p, j);
            const Complex aqj = a(q, j);
            a(p, j) = c * apj + std::conj(rqp) * aqj;
            a(q, j) = std::conj(rpq) * apj + c * aqj;
          }
          for (int i = 0; i < n; ++i) {
            const Complex aip = a(i, p);
            const Complex aiq = a(i, q);
            a(i, p) = c * aip + rqp * aiq;
            a(i, q) = rpq * aip + c * aiq;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = Complex(a(p, p).real(), 0.0);
          a(q, q) = Complex(a(q, q).real(), 0.0);

          // V <- V R
          for (int i = 0; i < n; ++i) {
            const Complex vip = v(i, p);
            const Complex viq = v(i, q);
            v(i, p) = c * vip + rqp * viq;
            v(i, q) = rpq * vip + c * viq;
          }
        }
      }
    }
    if (!converged && detail::off_diagonal_norm(a) > target) {
      throw NoConvergence("eigh: Jacobi iteration did not converge in 100 sweeps");
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EighResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

} // namespace cgpkit

#endif // CGPKIT_EIGH_HPP
