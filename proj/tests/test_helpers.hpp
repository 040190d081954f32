#ifndef CGPKIT_TEST_HELPERS_HPP
#define CGPKIT_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/density_matrix.hpp"
#include "cgpkit/rng.hpp"

namespace testkit {

/// Plain value function wrapped for the quotient-form divided difference.
struct ValueFamily {
  std::function<double(double)> f;
  double derivative(double x, int order) const {
    if (order != 0) throw cgpkit::DerivativeUnavailable("value-only family");
    return f(x);
  }
};

/// Quotient form sum f(x_j) / prod (x_j - x_i) at explicitly given nodes.
/// Accumulates in long double: near-coincident nodes make the terms blow
/// up like gap^-(m-1) before cancelling, and the oracle has to stay well
/// under the 1e-6 comparison tolerance on its own.
inline double quotient_at(const std::function<double(double)>& f,
                          const std::vector<double>& nodes) {
  long double sum = 0.0L;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    long double denom = 1.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i != j) denom *= static_cast<long double>(nodes[j]) - nodes[i];
    }
    sum += static_cast<long double>(f(nodes[j])) / denom;
  }
  return static_cast<double>(sum);
}

/// Independent oracle for divided differences at tied/zero nodes: evaluate
/// the distinct-node quotient at jittered nodes for eps = 1e-5 and 1e-6 and
/// Richardson-extrapolate the eps -> 0 limit. Near-equal nodes get distinct
/// offsets, symmetric about the group center except at the x = 0 boundary
/// where they go one-sided to stay in the domain. The whole evaluation runs
/// in long double: terms grow like eps^-(m-1) before cancelling, so plain
/// double function values would poison the 1e-6 comparisons on their own.
inline double jittered_quotient_oracle(const std::function<long double(long double)>& f,
                                       std::vector<double> nodes) {
  std::sort(nodes.begin(), nodes.end());

  const auto evaluate = [&](long double eps) {
    std::vector<long double> jittered(nodes.size());
    std::size_t start = 0;
    for (std::size_t i = 1; i <= nodes.size(); ++i) {
      if (i == nodes.size() || nodes[i] - nodes[i - 1] > 1e-7) {
        const std::size_t m = i - start;
        const long double center = nodes[start];
        const bool one_sided = center - 0.5L * (m - 1) * eps < 0.0L;
        for (std::size_t k = 0; k < m; ++k) {
          const long double offset =
              one_sided ? static_cast<long double>(k) * eps
                        : (static_cast<long double>(k) - 0.5L * (m - 1)) * eps;
          jittered[start + k] = center + offset;
        }
        start = i;
      }
    }
    long double sum = 0.0L;
    for (std::size_t j = 0; j < jittered.size(); ++j) {
      long double denom = 1.0L;
      for (std::size_t i = 0; i < jittered.size(); ++i) {
        if (i != j) denom *= jittered[j] - jittered[i];
      }
      sum += f(jittered[j]) / denom;
    }
    return sum;
  };

  const long double coarse = evaluate(1e-5L);
  const long double fine = evaluate(1e-6L);
  return static_cast<double>((10.0L * fine - coarse) / 9.0L);
}

inline cgpkit::ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
  cgpkit::KeyedStream stream(seed, 0x4865726dULL);
  cgpkit::ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = cgpkit::Complex(stream.gaussian(), stream.gaussian());
  cgpkit::ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

inline cgpkit::ComplexMatrix random_complex(int n, std::uint64_t seed) {
  cgpkit::KeyedStream stream(seed, 0x436d7078ULL);
  cgpkit::ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = cgpkit::Complex(stream.gaussian(), stream.gaussian());
  return g;
}

/// Full-rank random state: normalized Wishart plus a pinch of the
/// maximally mixed state.
inline cgpkit::DensityMatrix random_density(int n, std::uint64_t seed) {
  const cgpkit::ComplexMatrix g = random_complex(n, seed);
  const cgpkit::ComplexMatrix w = g * g.adjoint();
  const double tr = w.trace().real();
  cgpkit::ComplexMatrix rho(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rho(i, j) = 0.9 * w(i, j) / tr;
    rho(i, i) += 0.1 / n;
  }
  return cgpkit::DensityMatrix::make(std::move(rho));
}

} // namespace testkit

#endif // CGPKIT_TEST_HELPERS_HPP
