/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_DIVIDED_DIFFERENCE_HPP
#define CGPKIT_DIVIDED_DIFFERENCE_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>
#include <string>
#include <vector>

#include "cgpkit/errors.hpp"

namespace cgpkit {

/// A smooth function handed to the divided-difference engine as values plus
/// derivatives. derivative(x, 0) is the value; derivative(x, k) the k-th
/// derivative. A family throws DerivativeUnavailable where the requested
/// order has no finite value (e.g. too-high orders of x^a ln x at x = 0).
template <class F>
concept DerivativeFamily = requires(const F& f, double x, int order) {
  { f.derivative(x, order) } -> std::convertible_to<double>;
};

inline constexpr double kNodeClusterTolerance = 1e-9;

/// Abscissae grouped into clusters of coincident nodes. Nodes whose gap is
/// at most the clustering tolerance share a cluster (single linkage after
/// sorting); the cluster representative is the cluster mean. This resolves
/// the removable 0/0 singularities of quotient-form divided differences.
class NodeSet {
public:
  static NodeSet cluster(std::span<const double> nodes,
                         double tol = kNodeClusterTolerance) {
    if (nodes.empty()) throw BadParameter("node set must not be empty");
    std::vector<double> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());

    NodeSet ns;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
      if (i == sorted.size() || sorted[i] - sorted[i - 1] > tol) {
        double mean = 0.0;
        for (std::size_t k = start; k < i; ++k) mean += sorted[k];
        mean /= static_cast<double>(i - start);
        ns.nodes_.push_back(mean);
        ns.multiplicities_.push_back(static_cast<int>(i - start));
        start = i;
      }
    }
    return ns;
  }

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<int>& multiplicities() const noexcept { return multiplicities_; }

  int total() const noexcept {
    int t = 0;
    for (int m : multiplicities_) t += m;
    return t;
  }

  int max_multiplicity() const noexcept {
    return *std::max_element(multiplicities_.begin(), multiplicities_.end());
  }

private:
  std::vector<double> nodes_;
  std::vector<int> multiplicities_;
};

/// Divided difference f[x_1, ..., x_n] over an already-clustered node set,
/// by the Hermite (confluent) table: within a cluster of multiplicity m the
/// entries are f^(k)(x)/k! for k < m, across clusters the usual quotient
/// recurrence applies. Symmetric under any permutation of the input nodes
/// because clustering sorts them first.
template <DerivativeFamily F>
double confluent_divided_difference(const F& f, const NodeSet& ns) {
  const int n = ns.total();
  std::vector<double> z;
  z.reserve(n);
  for (std::size_t c = 0; c < ns.nodes().size(); ++c) {
    for (int k = 0; k < ns.multiplicities()[c]; ++k) z.push_back(ns.nodes()[c]);
  }

  // column j holds f[z_i, ..., z_{i+j}]
  std::vector<double> col(n);
  for (int i = 0; i < n; ++i) col[i] = f.derivative(z[i], 0);

  double factorial = 1.0;
  for (int j = 1; j < n; ++j) {
    factorial *= j;
    for (int i = 0; i + j < n; ++i) {
      if (z[i] == z[i + j]) {
        col[i] = f.derivative(z[i], j) / factorial;
      } else {
        col[i] = (col[i + 1] - col[i]) / (z[i + j] - z[i]);
      }
    }
    col.resize(n - j); // keep indices aligned with spans starting at i
  }
  return col[0];
}

template <DerivativeFamily F>
double confluent_divided_difference(const F& f, std::span<const double> nodes,
                                    double cluster_tol = kNodeClusterTolerance) {
  return confluent_divided_difference(f, NodeSet::cluster(nodes, cluster_tol));
}

/// Classical quotient form  sum_j f(x_j) / prod_{i != j} (x_j - x_i).
/// Requires pairwise distinct nodes; numerically trustworthy only when the
/// gaps are not small. Kept as the second, independent route for checks.
template <DerivativeFamily F>
double divided_difference_quotient(const F& f, std::span<const double> nodes) {
  const std::size_t n = nodes.size();
  if (n == 0) throw BadParameter("node set must not be empty");
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double denom = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const double gap = nodes[j] - nodes[i];
      if (gap == 0.0) throw BadParameter("quotient form needs distinct nodes");
      denom *= gap;
    }
    sum += f.derivative(nodes[j], 0) / denom;
  }
  return sum;
}

/// f(x) = x^a ln x for integer a >= 1, with the 0 ln 0 = 0 convention.
/// Derivatives of order k <= a - 1 extend continuously to 0 at x = 0;
/// orders k >= a diverge there.
class PowerLogFamily {
public:
  explicit PowerLogFamily(int power) : a_(power) {
    if (power < 1) throw BadParameter("x^a ln x family needs a >= 1");
  }

  double derivative(double x, int k) const {
    if (k < 0) throw BadParameter("derivative order must be nonnegative");
    if (x < 0.0) throw BadParameter("x^a ln x is defined on [0, inf)");
    if (x == 0.0) {
      if (k <= a_ - 1) return 0.0;
      throw DerivativeUnavailable("d^" + std::to_string(k) + " of x^" +
                                  std::to_string(a_) + " ln x diverges at x = 0");
    }
    if (k <= a_) {
      // d^k/dx^k = a!/(a-k)! x^(a-k) (ln x + H_a - H_{a-k})
      double falling = 1.0;
      for (int j = 0; j < k; ++j) falling *= (a_ - j);
      double harmonic_gap = 0.0;
      for (int j = a_ - k + 1; j <= a_; ++j) harmonic_gap += 1.0 / j;
      return falling * std::pow(x, a_ - k) * (std::log(x) + harmonic_gap);
    }
    // orders past a differentiate a! ln x (+ const)
    double coeff = 1.0;
    for (int j = 2; j <= a_; ++j) coeff *= j;
    for (int j = 1; j < k - a_; ++j) coeff *= j;
    if ((k - a_ - 1) % 2 != 0) coeff = -coeff;
    return coeff * std::pow(x, a_ - k);
  }

  int power() const noexcept { return a_; }

private:
  int a_;
};

/// f(x) = x^p for real p > 0 on [0, inf).
class PowerFamily {
public:
  explicit PowerFamily(double exponent) : p_(exponent) {
    if (!(exponent > 0.0)) throw BadParameter("x^p family needs p > 0");
  }

  double derivative(double x, int k) const {
    if (k < 0) throw BadParameter("derivative order must be nonnegative");
    if (x < 0.0) throw BadParameter("x^p is defined on [0, inf)");
    double coeff = 1.0;
    for (int j = 0; j < k; ++j) coeff *= (p_ - j);
    if (coeff == 0.0) return 0.0; // integer p differentiated past its degree
    if (x == 0.0) {
      if (p_ - k > 0.0) return 0.0;
      if (p_ - k == 0.0) return coeff;
      throw DerivativeUnavailable("d^" + std::to_string(k) + " of x^p diverges at x = 0");
    }
    return coeff * std::pow(x, p_ - k);
  }

private:
  double p_;
};

} // namespace cgpkit

#endif // CGPKIT_DIVIDED_DIFFERENCE_HPP
