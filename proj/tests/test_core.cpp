#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cgpkit/divided_difference.hpp"
#include "cgpkit/eigh.hpp"
#include "cgpkit/probability_vector.hpp"
#include "cgpkit/simplex_sampler.hpp"

#include "test_helpers.hpp"

using namespace cgpkit;

TEST_CASE("probability vector validation") {
  ProbabilityVector p({0.25, 0.75});
  CHECK(p.dim() == 2);
  CHECK(p[0] == 0.25);

  // roundoff-negative entries clamp to zero
  ProbabilityVector q({1.0 + 5e-13, -5e-13});
  CHECK(q[1] == 0.0);

  CHECK_THROWS_AS(ProbabilityVector({0.5, -1e-3, 0.5}), BadParameter);
  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.4}), BadParameter);
  CHECK_THROWS_AS(ProbabilityVector({}), BadParameter);
}

TEST_CASE("eigh: known spectra") {
  ComplexMatrix pauli_x(2, 2);
  pauli_x(0, 1) = 1.0;
  pauli_x(1, 0) = 1.0;
  auto ex = eigh(pauli_x);
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  ComplexMatrix pauli_y(2, 2);
  pauli_y(0, 1) = Complex(0.0, -1.0);
  pauli_y(1, 0) = Complex(0.0, 1.0);
  auto ey = eigh(pauli_y);
  CHECK(ey.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ey.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  auto ei = eigh(ComplexMatrix::identity(3));
  for (double w : ei.eigenvalues) CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigh: rejects non-hermitian input") {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(1.0, 0.5);
  m(1, 0) = Complex(1.0, 0.5); // conj would be (1, -0.5)
  CHECK_THROWS_AS(eigh(m), NotHermitian);

  // NaN must not slip past the symmetry comparison
  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(eigh(bad), NotHermitian);
}

TEST_CASE("eigh: reconstruction, residual, orthonormality on random input") {
  for (int n : {2, 3, 5, 8, 16}) {
    const ComplexMatrix a = testkit::random_hermitian(n, 1000 + n);
    const auto eig = eigh(a);

    for (int k = 1; k < n; ++k) CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);

    CHECK(unitarity_defect(eig.eigenvectors) <= 1e-10);

    // A v_k = w_k v_k
    double residual = 0.0;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        Complex av = 0.0;
        for (int j = 0; j < n; ++j) av += a(i, j) * eig.eigenvectors(j, k);
        residual = std::max(residual,
                            std::abs(av - eig.eigenvalues[k] * eig.eigenvectors(i, k)));
      }
    }
    CHECK(residual <= 1e-10);

    // V diag(w) V^H = A
    ComplexMatrix reconstructed(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Complex s = 0.0;
        for (int k = 0; k < n; ++k)
          s += eig.eigenvectors(i, k) * eig.eigenvalues[k] *
               std::conj(eig.eigenvectors(j, k));
        reconstructed(i, j) = s;
      }
    CHECK(max_abs_diff(reconstructed, a) <= 1e-9);
  }
}

TEST_CASE("eigh: degenerate spectrum") {
  // U diag(1, 1, 1, 2, 2, 0.5) U^H keeps its multiplicities
  KeyedStream stream(314, 0);
  ComplexMatrix g(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) g(i, j) = Complex(stream.gaussian(), stream.gaussian());
  // orthonormalize
  for (int j = 0; j < 6; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (int i = 0; i < 6; ++i) proj += std::conj(g(i, k)) * g(i, j);
      for (int i = 0; i < 6; ++i) g(i, j) -= proj * g(i, k);
    }
    double norm = 0.0;
    for (int i = 0; i < 6; ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < 6; ++i) g(i, j) /= norm;
  }
  const double w[6] = {1.0, 1.0, 1.0, 2.0, 2.0, 0.5};
  ComplexMatrix a(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 6; ++k) s += g(i, k) * w[k] * std::conj(g(j, k));
      a(i, j) = s;
    }
  const auto eig = eigh(a);
  const double expected[6] = {0.5, 1.0, 1.0, 1.0, 2.0, 2.0};
  for (int k = 0; k < 6; ++k)
    CHECK(eig.eigenvalues[k] == doctest::Approx(expected[k]).epsilon(1e-11));
  CHECK(unitarity_defect(eig.eigenvectors) <= 1e-10);
}

TEST_CASE("simplex sampler: determinism and counter contract") {
  SimplexSampler s1(4, 99);
  SimplexSampler s2(4, 99);
  const auto a = s1.at(7);
  const auto b = s2.at(7);
  for (int i = 0; i < 4; ++i) CHECK(a[i] == b[i]); // bit-identical

  CHECK(s1.counter() == 0);
  const auto first = s1.next();
  CHECK(s1.counter() == 1);
  const auto first_again = SimplexSampler(4, 99).at(0);
  for (int i = 0; i < 4; ++i) CHECK(first[i] == first_again[i]);

  CHECK_THROWS_AS(SimplexSampler(1, 0), BadParameter);
}

TEST_CASE("simplex sampler: component means are 1/N") {
  const int n = 3;
  const std::uint64_t samples = 100000;
  SimplexSampler sampler(n, 2024);
  std::vector<double> sum(n, 0.0), sumsq(n, 0.0);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const auto lambda = sampler.at(k);
    for (int i = 0; i < n; ++i) {
      sum[i] += lambda[i];
      sumsq[i] += lambda[i] * lambda[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    const double mean = sum[i] / samples;
    const double var = (sumsq[i] / samples - mean * mean) * samples / (samples - 1.0);
    const double se = std::sqrt(var / samples);
    CHECK(std::abs(mean - 1.0 / n) <= 4.0 * se);
  }
}

TEST_CASE("simplex sampler: mean entropy at N=4 is H_4 - 1") {
  const int n = 4;
  const std::uint64_t samples = 100000;
  SimplexSampler sampler(n, 555);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const auto lambda = sampler.at(k);
    double h = 0.0;
    for (int i = 0; i < n; ++i)
      if (lambda[i] > 0.0) h -= lambda[i] * std::log(lambda[i]);
    sum += h;
    sumsq += h * h;
  }
  const double mean = sum / samples;
  const double var = (sumsq / samples - mean * mean) * samples / (samples - 1.0);
  const double se = std::sqrt(var / samples);
  const double expected = 25.0 / 12.0 - 1.0; // H_4 - 1
  CHECK(std::abs(mean - expected) <= 4.0 * se);
}

TEST_CASE("simplex sampler: each component matches Beta(1, N-1)") {
  const std::uint64_t samples = 100000;
  const double critical = 1.6276 / std::sqrt(static_cast<double>(samples)); // 1% point
  for (int n = 2; n <= 6; ++n) {
    SimplexSampler sampler(n, 31 * n);
    std::vector<std::vector<double>> comp(n, std::vector<double>(samples));
    for (std::uint64_t k = 0; k < samples; ++k) {
      const auto lambda = sampler.at(k);
      for (int i = 0; i < n; ++i) comp[i][k] = lambda[i];
    }
    for (int i = 0; i < n; ++i) {
      std::sort(comp[i].begin(), comp[i].end());
      double d = 0.0;
      for (std::uint64_t k = 0; k < samples; ++k) {
        const double cdf = 1.0 - std::pow(1.0 - comp[i][k], n - 1);
        d = std::max(d, std::abs(cdf - static_cast<double>(k) / samples));
        d = std::max(d, std::abs(cdf - static_cast<double>(k + 1) / samples));
      }
      CHECK(d < critical);
    }
  }
}

TEST_CASE("node clustering") {
  const std::vector<double> nodes = {0.5, 0.5 + 4e-10, 0.1, 0.5 - 4e-10, 0.1};
  const NodeSet ns = NodeSet::cluster(nodes);
  CHECK(ns.nodes().size() == 2);
  CHECK(ns.total() == 5);
  CHECK(ns.multiplicities()[0] == 2);
  CHECK(ns.multiplicities()[1] == 3);
  CHECK(ns.nodes()[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(ns.nodes()[1] == doctest::Approx(0.5).epsilon(1e-12));
  // representatives stay separated by more than the tolerance
  CHECK(ns.nodes()[1] - ns.nodes()[0] > kNodeClusterTolerance);

  // single-linkage chains: pairwise-close nodes collapse into one cluster
  const std::vector<double> chain = {0.2, 0.2 + 0.9e-9, 0.2 + 1.8e-9};
  const NodeSet cs = NodeSet::cluster(chain);
  CHECK(cs.nodes().size() == 1);
  CHECK(cs.multiplicities()[0] == 3);
  CHECK(cs.total() == 3);
}

TEST_CASE("divided difference: second-degree quotient") {
  const PowerFamily square(2.0);
  const std::vector<double> nodes = {0.2, 0.9};
  CHECK(confluent_divided_difference(square, std::span<const double>(nodes)) ==
        doctest::Approx(0.2 + 0.9).epsilon(1e-14));
}

TEST_CASE("divided difference: fully confluent point is the scaled derivative") {
  // x^3 at {c, c, c}: f''(c)/2! = 3c
  const PowerFamily cube(3.0);
  const std::vector<double> tied = {0.4, 0.4, 0.4};
  CHECK(confluent_divided_difference(cube, std::span<const double>(tied)) ==
        doctest::Approx(3.0 * 0.4).epsilon(1e-14));

  // x^4 ln x at {c, c}: f'(c) = 4 c^3 ln c + c^3
  const PowerLogFamily f(4);
  const double c = 0.3;
  const std::vector<double> pair = {c, c};
  const double expected = 4.0 * c * c * c * std::log(c) + c * c * c;
  CHECK(confluent_divided_difference(f, std::span<const double>(pair)) ==
        doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("power-log family derivatives match finite differences") {
  const PowerLogFamily f(4);
  const double h = 1e-6;
  for (double x : {0.2, 0.55, 0.9}) {
    for (int k = 1; k <= 3; ++k) {
      const double numeric =
          (f.derivative(x + h, k - 1) - f.derivative(x - h, k - 1)) / (2.0 * h);
      CHECK(f.derivative(x, k) == doctest::Approx(numeric).epsilon(1e-7));
    }
  }
  // limits at zero up to order a-1, divergence beyond
  for (int k = 0; k <= 3; ++k) CHECK(f.derivative(0.0, k) == 0.0);
  CHECK_THROWS_AS(f.derivative(0.0, 4), DerivativeUnavailable);
}

TEST_CASE("divided difference: tied and zero nodes take the jittered-node limit") {
  const PowerLogFamily f(4);
  const std::vector<double> nodes = {0.5, 0.5, 0.0, 0.0};
  const double confluent =
      confluent_divided_difference(f, std::span<const double>(nodes));

  CHECK(confluent == doctest::Approx(-(std::log(2.0) - 0.5)).epsilon(1e-12));

  const auto value = [](long double x) { return x > 0.0L ? x * x * x * x * std::log(x) : 0.0L; };
  const double oracle = testkit::jittered_quotient_oracle(value, nodes);
  CHECK(std::abs(confluent - oracle) <= 1e-6);
}

TEST_CASE("divided difference: symmetric under node permutation") {
  const PowerLogFamily f(5);
  std::vector<double> nodes = {0.3, 0.05, 0.3, 0.2, 0.15};
  const double reference = confluent_divided_difference(f, std::span<const double>(nodes));
  std::sort(nodes.begin(), nodes.end());
  do {
    CHECK(confluent_divided_difference(f, std::span<const double>(nodes)) == reference);
  } while (std::next_permutation(nodes.begin(), nodes.end()));
}

TEST_CASE("divided difference: confluent path matches the quotient on separated nodes") {
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      KeyedStream stream(4000 + n, rep);
      std::vector<double> nodes(n);
      bool ok = true;
      for (int i = 0; i < n; ++i) nodes[i] = stream.uniform();
      std::vector<double> sorted = nodes;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 1; i < n; ++i) {
        if (sorted[i] - sorted[i - 1] < 1e-3) ok = false;
      }
      if (!ok) continue;

      const PowerLogFamily f(n);
      const double a = confluent_divided_difference(f, std::span<const double>(nodes));
      const double b = divided_difference_quotient(f, std::span<const double>(nodes));
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("divided difference: value-only family cannot serve tied nodes") {
  const testkit::ValueFamily f{[](double x) { return x * x; }};
  const std::vector<double> tied = {0.5, 0.5};
  CHECK_THROWS_AS(confluent_divided_difference(f, std::span<const double>(tied)),
                  DerivativeUnavailable);
  const std::vector<double> apart = {0.25, 0.75};
  CHECK(confluent_divided_difference(f, std::span<const double>(apart)) ==
        doctest::Approx(1.0).epsilon(1e-14));
}
