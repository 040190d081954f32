/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_ENTROPY_HPP
#define CGPKIT_ENTROPY_HPP

#include <cmath>
#include <span>
#include <vector>

#include "cgpkit/density_matrix.hpp"
#include "cgpkit/divided_difference.hpp"
#include "cgpkit/eigh.hpp"
#include "cgpkit/errors.hpp"
#include "cgpkit/probability_vector.hpp"
#include "cgpkit/special_functions.hpp"
#include "cgpkit/stochastic_matrix.hpp"

namespace cgpkit {

/// H(p) = -sum p_i ln p_i, in nats, with 0 ln 0 = 0.
inline double shannon_entropy(const ProbabilityVector& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

/// H(p||q) = sum p_i (ln p_i - ln q_i). Throws SupportViolation when some
/// p_i > 0 sits on q_i = 0.
inline double relative_entropy(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("relative entropy dimension mismatch");
  double h = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) {
      throw SupportViolation("relative entropy: p has mass outside the support of q");
    }
    h += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return h;
}

namespace detail {

/// Shannon entropy of an eigenvalue list, clamping roundoff into [0, 1].
inline double spectrum_entropy(std::span<const double> eigenvalues) {
  double h = 0.0;
  for (double w : eigenvalues) {
    const double x = std::min(std::max(w, 0.0), 1.0);
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

} // namespace detail

/// S(rho) = -Tr rho ln rho.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = eigh(rho.matrix());
  return detail::spectrum_entropy(eig.eigenvalues);
}

/// S(rho||sigma) = Tr rho (ln rho - ln sigma), the standard sign convention.
inline double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  static constexpr double kSupportTol = 1e-10;
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("quantum relative entropy dimension mismatch");
  }
  const int n = rho.dim();
  const auto er = eigh(rho.matrix());
  const auto es = eigh(sigma.matrix());

  double tr_rho_log_rho = 0.0;
  for (double w : er.eigenvalues) {
    const double x = std::min(std::max(w, 0.0), 1.0);
    if (x > 0.0) tr_rho_log_rho += x * std::log(x);
  }

  // Tr rho ln sigma = sum_j ln s_j <v_j| rho |v_j>
  double tr_rho_log_sigma = 0.0;
  for (int j = 0; j < n; ++j) {
    Complex vrv = 0.0;
    for (int a = 0; a < n; ++a) {
      Complex row = 0.0;
      for (int b = 0; b < n; ++b) row += rho(a, b) * es.eigenvectors(b, j);
      vrv += std::conj(es.eigenvectors(a, j)) * row;
    }
    const double weight = std::max(vrv.real(), 0.0);
    const double s = es.eigenvalues[j];
    if (s <= kSupportTol) {
      if (weight > kSupportTol) {
        throw SupportViolation("quantum relative entropy: rho has support outside sigma");
      }
      continue;
    }
    tr_rho_log_sigma += weight * std::log(s);
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

/// Subentropy Q(lambda) = - sum_i lambda_i^N ln lambda_i / prod_{j != i}
/// (lambda_i - lambda_j), evaluated as minus the confluent divided
/// difference of x^N ln x over the entries, so repeated and zero entries
/// take their limit values instead of hitting 0/0.
inline double subentropy(const ProbabilityVector& lambda) {
  const PowerLogFamily f(lambda.dim());
  const double q = -confluent_divided_difference(
      f, std::span<const double>(lambda.entries()));
  // roundoff guard: Q is provably within [0, ln N - H_N + 1]; also folds
  // the negative zero a vanishing divided difference produces
  if (q <= 0.0 && q > -1e-9) return 0.0;
  return q;
}

/// ln N - H_N + 1, the subentropy of the uniform distribution and the
/// largest value Q attains on the N-simplex.
inline double max_subentropy(int n) {
  return std::log(static_cast<double>(n)) - harmonic_number(n) + 1.0;
}

/// H_p(B) = sum_j p_j H(beta_j) over the columns beta_j of B.
inline double weighted_entropy(const StochasticMatrix& b, const ProbabilityVector& p) {
  if (b.dim() != p.dim()) throw DimensionMismatch("weighted entropy dimension mismatch");
  double h = 0.0;
  for (int j = 0; j < b.dim(); ++j) {
    if (p[j] > 0.0) h += p[j] * shannon_entropy(b.column(j));
  }
  return h;
}

/// Q_p(B) = sum_j p_j Q(beta_j).
inline double weighted_subentropy(const StochasticMatrix& b, const ProbabilityVector& p) {
  if (b.dim() != p.dim()) throw DimensionMismatch("weighted subentropy dimension mismatch");
  double q = 0.0;
  for (int j = 0; j < b.dim(); ++j) {
    if (p[j] > 0.0) q += p[j] * subentropy(b.column(j));
  }
  return q;
}

/// H(B): the uniform-weight column average.
inline double matrix_entropy(const StochasticMatrix& b) {
  return weighted_entropy(b, ProbabilityVector::uniform(b.dim()));
}

/// Q(B): the uniform-weight column average.
inline double matrix_subentropy(const StochasticMatrix& b) {
  return weighted_subentropy(b, ProbabilityVector::uniform(b.dim()));
}

/// Relative entropy of coherence C_r(rho) = S(rho_diag) - S(rho), the
/// coherence of rho with respect to the computational basis.
inline double coherence_relative_entropy(const DensityMatrix& rho) {
  return shannon_entropy(rho.diagonal_distribution()) - von_neumann_entropy(rho);
}

} // namespace cgpkit

#endif // CGPKIT_ENTROPY_HPP
