/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_IDENTITY_BATTERY_HPP
#define CGPKIT_IDENTITY_BATTERY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cgpkit/bistochastic.hpp"
#include "cgpkit/cgp.hpp"
#include "cgpkit/divided_difference.hpp"
#include "cgpkit/entropy.hpp"
#include "cgpkit/errors.hpp"
#include "cgpkit/kraus_channel.hpp"
#include "cgpkit/simplex_sampler.hpp"
#include "cgpkit/special_functions.hpp"

namespace cgpkit {

// Numerical verification layer: every closed-form simplex integral the
// library relies on is checked against an independent Monte Carlo estimate
// (or a second closed form), and the inequalities against random sweeps.

struct IdentityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  enum class Method { closed_form_vs_mc, closed_form_vs_closed_form } method =
      Method::closed_form_vs_mc;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool passed = false;
};

inline nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_diff"] = r.abs_diff;
  j["tolerance"] = r.tolerance;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["passed"] = r.passed;
  return j;
}

inline nlohmann::json reports_to_json(const std::vector<IdentityReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

namespace detail {

/// Serial mean and standard error of g(lambda) over `samples` simplex draws.
template <class G>
std::pair<double, double> simplex_mc(int dim, std::uint64_t samples, std::uint64_t seed,
                                     const G& g) {
  const SimplexSampler sampler(dim, seed);
  std::vector<double> values(samples);
  for (std::uint64_t k = 0; k < samples; ++k) values[k] = g(sampler.at(k));
  const CgpEstimate est = reduce_estimate(values, seed, dim);
  return {est.mean, est.std_error};
}

inline IdentityReport mc_report(std::string name, double closed, double mc_mean,
                                double mc_se, std::uint64_t samples, std::uint64_t seed) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = mc_mean;
  r.rhs = closed;
  r.abs_diff = std::abs(mc_mean - closed);
  // 4 SE plus a roundoff floor for constant integrands, where SE underflows
  r.tolerance = 4.0 * mc_se + 1e-12;
  r.method = IdentityReport::Method::closed_form_vs_mc;
  r.samples = samples;
  r.seed = seed;
  r.passed = r.abs_diff <= r.tolerance;
  return r;
}

/// Probability vector with a minimum pairwise gap, so the quotient-form
/// divided difference stays in its trust region.
inline ProbabilityVector random_distinct_probability(int dim, std::uint64_t seed,
                                                     double min_gap = 1e-3) {
  const SimplexSampler sampler(dim, seed);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    ProbabilityVector p = sampler.at(k);
    std::vector<double> sorted(p.entries());
    std::sort(sorted.begin(), sorted.end());
    double gap = 2.0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      gap = std::min(gap, sorted[i] - sorted[i - 1]);
    }
    if (gap >= min_gap) return p;
  }
  throw NoConvergence("could not draw a well-separated probability vector");
}

/// Full-rank random state: normalized Wishart matrix mixed with a little
/// of the maximally mixed state.
inline DensityMatrix random_full_rank_density(int n, std::uint64_t seed) {
  KeyedStream stream(seed, 0x7264656e73ULL);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(stream.gaussian(), stream.gaussian());
  ComplexMatrix w = g * g.adjoint();
  const double tr = w.trace().real();
  ComplexMatrix rho(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rho(i, j) = 0.95 * w(i, j) / tr;
    rho(i, i) += 0.05 / n;
  }
  return DensityMatrix::trusted(std::move(rho));
}

} // namespace detail

/// Closed form of the simplex moment integral
///   I_p(alpha) = Gamma(N) int (sum_j p_j lambda_j)^alpha delta(1 - sum) prod d lambda
///              = [Gamma(N) Gamma(alpha+1) / Gamma(alpha+N)]
///                  * sum_j p_j^{alpha+N-1} / prod_{i != j} (p_j - p_i),
/// with the sum evaluated as a confluent divided difference of x^{alpha+N-1}
/// so repeated entries are fine.
inline double ip_alpha_closed(const ProbabilityVector& p, double alpha) {
  if (!(alpha > -1.0)) throw BadParameter("moment integral needs alpha > -1");
  const int n = p.dim();
  if (n == 1) return 1.0;
  const PowerFamily g(alpha + n - 1.0);
  const double dd =
      confluent_divided_difference(g, std::span<const double>(p.entries()));
  return gamma_ratio(n, alpha) * dd;
}

/// d I_p(alpha) / d alpha at alpha = 1: the closed form -(1/N)(H_N - 1 + Q(p)).
inline double ip_prime_at_one(const ProbabilityVector& p) {
  const int n = p.dim();
  return -(harmonic_number(n) - 1.0 + subentropy(p)) / n;
}

/// MC check of  int H(B lambda) d mu = H_N - 1 + Q(B^T)  for bi-stochastic B.
inline IdentityReport verify_lemma_integral(const StochasticMatrix& b,
                                            std::uint64_t samples, std::uint64_t seed,
                                            std::string name = "") {
  if (!b.bi_stochastic()) throw NotBiStochastic("entropy integral needs a bi-stochastic matrix");
  const int n = b.dim();
  const double closed =
      harmonic_number(n) - 1.0 + matrix_subentropy(b.transpose());
  const auto [mean, se] = detail::simplex_mc(
      n, samples, seed,
      [&b](const ProbabilityVector& lambda) { return shannon_entropy(b.apply(lambda)); });
  if (name.empty()) name = "entropy_integral[n=" + std::to_string(n) + "]";
  return detail::mc_report(std::move(name), closed, mean, se, samples, seed);
}

/// MC check of  int H_lambda(B) d mu = (1/N) sum_i H(beta_i)  (= H(B)).
inline IdentityReport verify_weighted_entropy_integral(const StochasticMatrix& b,
                                                       std::uint64_t samples,
                                                       std::uint64_t seed,
                                                       std::string name = "") {
  if (!b.bi_stochastic()) throw NotBiStochastic("weighted entropy integral needs a bi-stochastic matrix");
  const int n = b.dim();
  std::vector<double> column_entropy(n);
  for (int j = 0; j < n; ++j) column_entropy[j] = shannon_entropy(b.column(j));
  const double closed = matrix_entropy(b);
  const auto [mean, se] = detail::simplex_mc(
      n, samples, seed, [&column_entropy, n](const ProbabilityVector& lambda) {
        double h = 0.0;
        for (int j = 0; j < n; ++j) h += lambda[j] * column_entropy[j];
        return h;
      });
  if (name.empty()) name = "weighted_entropy_integral[n=" + std::to_string(n) + "]";
  return detail::mc_report(std::move(name), closed, mean, se, samples, seed);
}

/// Deterministic check of  Q(B^T) <= H(B)  for bi-stochastic B.
inline IdentityReport verify_q_le_h(const StochasticMatrix& b, std::string name = "") {
  if (!b.bi_stochastic()) throw NotBiStochastic("subentropy bound needs a bi-stochastic matrix");
  IdentityReport r;
  r.name = name.empty() ? "subentropy_bound[n=" + std::to_string(b.dim()) + "]"
                        : std::move(name);
  r.lhs = matrix_subentropy(b.transpose());
  r.rhs = matrix_entropy(b);
  r.abs_diff = std::max(r.lhs - r.rhs, 0.0);
  r.tolerance = 1e-10;
  r.method = IdentityReport::Method::closed_form_vs_closed_form;
  r.samples = 0;
  r.seed = 0;
  r.passed = r.abs_diff <= r.tolerance;
  return r;
}

/// Every identity the library's closed forms rest on, exercised with
/// sub-seeds derived from `seed`. Failures are reported, never thrown;
/// reports come back sorted by name.
inline std::vector<IdentityReport> run_identity_battery(std::uint64_t seed,
                                                        std::uint64_t samples = 100000) {
  std::vector<IdentityReport> reports;
  const auto sub = [seed](std::uint64_t item) { return keyed_word(seed, item, 0); };

  // int H(lambda) d mu = H_N - 1 (the identity-matrix case of the entropy integral)
  for (int n = 2; n <= 5; ++n) {
    reports.push_back(verify_lemma_integral(
        StochasticMatrix::identity(n), samples, sub(n),
        "entropy_integral[identity,n=" + std::to_string(n) + "]"));
  }

  // int H(B lambda) d mu = H_N - 1 + Q(B^T) for three families of B
  {
    const StochasticMatrix b = KrausChannel::unitary(random_unitary(3, sub(10))).kraus_matrix();
    reports.push_back(verify_lemma_integral(b, samples, sub(11),
                                            "entropy_integral[kraus_haar,n=3]"));
  }
  reports.push_back(verify_lemma_integral(random_permutation_mixture(4, 5, sub(12)), samples,
                                          sub(13), "entropy_integral[perm_mixture,n=4]"));
  reports.push_back(verify_lemma_integral(random_positive_bistochastic(4, sub(14)), samples,
                                          sub(15), "entropy_integral[sinkhorn,n=4]"));

  // int H_lambda(B) d mu = H(B)
  {
    const StochasticMatrix b = KrausChannel::unitary(random_unitary(3, sub(20))).kraus_matrix();
    reports.push_back(verify_weighted_entropy_integral(
        b, samples, sub(21), "weighted_entropy_integral[kraus_haar,n=3]"));
  }
  reports.push_back(verify_weighted_entropy_integral(
      random_positive_bistochastic(4, sub(22)), samples, sub(23),
      "weighted_entropy_integral[sinkhorn,n=4]"));

  // sum_j p_j^N / prod_{i != j} (p_j - p_i) = 1 on well-separated vectors
  {
    IdentityReport r;
    r.name = "power_sum_identity[n=2..5]";
    r.method = IdentityReport::Method::closed_form_vs_closed_form;
    r.tolerance = 1e-9;
    r.samples = 0;
    r.seed = sub(30);
    double worst = 0.0;
    double worst_value = 1.0;
    for (int n = 2; n <= 5; ++n) {
      for (int rep = 0; rep < 25; ++rep) {
        const ProbabilityVector p = detail::random_distinct_probability(
            n, keyed_word(r.seed, static_cast<std::uint64_t>(n) * 100 + rep, 1));
        const PowerFamily f(static_cast<double>(n));
        const double value =
            divided_difference_quotient(f, std::span<const double>(p.entries()));
        if (std::abs(value - 1.0) > worst) {
          worst = std::abs(value - 1.0);
          worst_value = value;
        }
      }
    }
    r.lhs = worst_value;
    r.rhs = 1.0;
    r.abs_diff = worst;
    r.passed = r.abs_diff <= r.tolerance;
    reports.push_back(r);
  }

  // I_p(alpha) closed form vs direct MC of the moment integral
  {
    const double alphas[] = {0.5, 1.0, 2.0, 3.0};
    for (int i = 0; i < 4; ++i) {
      const int n = 2 + i;
      const ProbabilityVector p =
          detail::random_distinct_probability(n, sub(40 + 2 * i));
      const double closed = ip_alpha_closed(p, alphas[i]);
      const double alpha = alphas[i];
      const auto [mean, se] = detail::simplex_mc(
          n, samples, sub(41 + 2 * i), [&p, alpha, n](const ProbabilityVector& lambda) {
            double dot = 0.0;
            for (int j = 0; j < n; ++j) dot += p[j] * lambda[j];
            return std::pow(dot, alpha);
          });
      char name[64];
      std::snprintf(name, sizeof(name), "moment_integral[alpha=%g,n=%d]", alphas[i], n);
      reports.push_back(detail::mc_report(name, closed, mean, se, samples, sub(41 + 2 * i)));
    }
  }

  // I'_p(1) closed form vs central differencing of I_p(alpha)
  {
    IdentityReport r;
    r.name = "moment_derivative[n=2..4]";
    r.method = IdentityReport::Method::closed_form_vs_closed_form;
    r.tolerance = 1e-6;
    r.samples = 0;
    r.seed = sub(50);
    static constexpr double kStep = 1e-4;
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
      const ProbabilityVector p = detail::random_distinct_probability(
          n, keyed_word(r.seed, static_cast<std::uint64_t>(n), 2));
      const double closed = ip_prime_at_one(p);
      const double numeric =
          (ip_alpha_closed(p, 1.0 + kStep) - ip_alpha_closed(p, 1.0 - kStep)) /
          (2.0 * kStep);
      if (std::abs(closed - numeric) > worst) {
        worst = std::abs(closed - numeric);
        r.lhs = closed;
        r.rhs = numeric;
      }
    }
    r.abs_diff = worst;
    r.passed = r.abs_diff <= r.tolerance;
    reports.push_back(r);
  }

  // Q(B^T) <= H(B) across mixed generators
  {
    IdentityReport r;
    r.name = "subentropy_bound[sweep]";
    r.method = IdentityReport::Method::closed_form_vs_closed_form;
    r.tolerance = 1e-10;
    r.samples = 0;
    r.seed = sub(60);
    double worst = -1.0;
    for (int rep = 0; rep < 100; ++rep) {
      const int n = 2 + rep % 4;
      const std::uint64_t s = keyed_word(r.seed, rep, 3);
      const StochasticMatrix b = (rep % 2 == 0)
                                     ? random_positive_bistochastic(n, s)
                                     : random_permutation_mixture(n, 3 + rep % 3, s);
      const double q = matrix_subentropy(b.transpose());
      const double h = matrix_entropy(b);
      if (q - h > worst) {
        worst = q - h;
        r.lhs = q;
        r.rhs = h;
      }
    }
    r.abs_diff = std::max(worst, 0.0);
    r.passed = r.abs_diff <= r.tolerance;
    reports.push_back(r);
  }

  // Closed unitary CGP vs Monte Carlo
  for (int n = 2; n <= 4; ++n) {
    const UnitaryMatrix u = random_unitary(n, sub(70 + n));
    const double closed = exact_cgp(u);
    const CgpEstimate est = mc_cgp(KrausChannel::unitary(u), samples, sub(80 + n));
    reports.push_back(detail::mc_report(
        "unitary_cgp_consistency[n=" + std::to_string(n) + "]", closed, est.mean,
        est.std_error, samples, est.seed));
  }

  // Unital channels stay below Q(B^T)
  for (int n = 2; n <= 3; ++n) {
    const KrausChannel phi = random_unital_channel(n, 3, sub(90 + n));
    const CgpBoundReport b = check_unital_bound(phi, samples, sub(95 + n));
    IdentityReport r;
    r.name = "unital_bound[n=" + std::to_string(n) + "]";
    r.lhs = b.estimate.mean;
    r.rhs = b.bound;
    r.abs_diff = std::max(b.estimate.mean - b.bound, 0.0);
    r.tolerance = 3.0 * b.estimate.std_error + 1e-8;
    r.method = IdentityReport::Method::closed_form_vs_mc;
    r.samples = samples;
    r.seed = b.estimate.seed;
    r.passed = b.satisfied;
    reports.push_back(r);
  }

  // Entropy gain of unital channels: S(Phi(rho)) - S(rho) >= S(rho || Phi* Phi(rho))
  {
    IdentityReport r;
    r.name = "entropy_gain_inequality[n=3]";
    r.method = IdentityReport::Method::closed_form_vs_closed_form;
    r.tolerance = 1e-8;
    r.samples = 0;
    r.seed = sub(100);
    double worst_slack = 1e300;
    for (int rep = 0; rep < 10; ++rep) {
      const KrausChannel phi =
          random_unital_channel(3, 2 + rep % 3, keyed_word(r.seed, rep, 4));
      const DensityMatrix rho =
          detail::random_full_rank_density(3, keyed_word(r.seed, rep, 5));
      const DensityMatrix out = phi.apply(rho);
      const DensityMatrix round_trip =
          DensityMatrix::trusted(phi.dual().apply_matrix(out.matrix()));
      const double gain = von_neumann_entropy(out) - von_neumann_entropy(rho);
      const double divergence = quantum_relative_entropy(rho, round_trip);
      if (gain - divergence < worst_slack) {
        worst_slack = gain - divergence;
        r.lhs = gain;
        r.rhs = divergence;
      }
    }
    r.abs_diff = std::max(-worst_slack, 0.0);
    r.passed = r.abs_diff <= r.tolerance;
    reports.push_back(r);
  }

  std::sort(reports.begin(), reports.end(),
            [](const IdentityReport& a, const IdentityReport& b) { return a.name < b.name; });
  return reports;
}

} // namespace cgpkit

#endif // CGPKIT_IDENTITY_BATTERY_HPP
