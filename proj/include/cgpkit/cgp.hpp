/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_CGP_HPP
#define CGPKIT_CGP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/eigh.hpp"
#include "cgpkit/entropy.hpp"
#include "cgpkit/errors.hpp"
#include "cgpkit/gates.hpp"
#include "cgpkit/kraus_channel.hpp"
#include "cgpkit/simplex_sampler.hpp"
#include "cgpkit/stochastic_matrix.hpp"

namespace cgpkit {

// Coherence generating power: the average relative entropy of coherence a
// channel creates from uniformly random incoherent inputs. For unitary
// channels the average has the closed form Q(B(U)^T); generic channels are
// estimated by seeded Monte Carlo over the simplex.

/// Monte Carlo estimate with its seed, so a result is reproducible.
struct CgpEstimate {
  double mean = 0.0;      // nats
  double std_error = 0.0; // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int dim = 0;
};

/// Estimate against the unital upper bound Q(B(Phi)^T).
struct CgpBoundReport {
  CgpEstimate estimate;
  double bound = 0.0;     // nats
  bool satisfied = false; // mean <= bound + 3 std_error (+ 1e-8 absolute)
  double slack = 0.0;     // bound - mean
};

/// Largest CGP any N x N unitary can attain: ln N - H_N + 1.
inline double max_cgp(int n) { return max_subentropy(n); }

/// Exact CGP of a unitary channel: Q(B(U)^T), the uniform average of the
/// subentropies of the rows of B(U).
inline double exact_cgp(const UnitaryMatrix& u) {
  const StochasticMatrix b = KrausChannel::unitary(u).kraus_matrix();
  double q = 0.0;
  for (int i = 0; i < b.dim(); ++i) q += subentropy(b.row(i));
  return q / b.dim();
}

/// CGP of the rotation gate as a function of the angle; the closed curve
/// (sin^4 ln sin^2 - cos^4 ln cos^2) / (cos^2 - sin^2) is the subentropy of
/// (cos^2 theta, sin^2 theta), which also covers the removable singularity
/// at cos^2 = sin^2.
inline double cgp_curve_rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return subentropy(ProbabilityVector({c * c, s * s}));
}

/// CGP of the partial swap gate (d = 2) as a function of t:
/// (t^2 ln t - (1-t)^2 ln(1-t)) / (2 (1-2t)) = Q(t, 1-t) / 2.
inline double cgp_curve_partial_swap(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw BadParameter("partial swap curve needs t in [0, 1]");
  return 0.5 * subentropy(ProbabilityVector({t, 1.0 - t}));
}

namespace detail {

/// Per-sample coherence generated from the k-th incoherent input.
/// The diagonal of the output is B(Phi) lambda for every channel; the
/// output entropy is H(lambda) itself for unitary channels (conjugation
/// preserves the spectrum) and comes from the eigensolver otherwise.
class CgpSampleEvaluator {
public:
  explicit CgpSampleEvaluator(const KrausChannel& phi)
      : phi_(phi), b_(phi.kraus_matrix()), unitary_(phi.unitary_channel()) {}

  double operator()(const ProbabilityVector& lambda) const {
    const double diag_entropy = shannon_entropy(b_.apply(lambda));
    double output_entropy;
    if (unitary_) {
      output_entropy = shannon_entropy(lambda);
    } else {
      ComplexMatrix diag(b_.dim(), b_.dim());
      for (int i = 0; i < b_.dim(); ++i) diag(i, i) = lambda[i];
      const auto eig = eigh(phi_.apply_matrix(diag));
      output_entropy = spectrum_entropy(eig.eigenvalues);
    }
    return diag_entropy - output_entropy;
  }

private:
  const KrausChannel& phi_;
  StochasticMatrix b_;
  bool unitary_;
};

/// Fill values[k] = f(sample k) for k in [0, samples), fanned out over
/// contiguous index ranges. Results are positionally identical for any
/// worker count because sample k depends only on (seed, k).
template <class F>
void fill_indexed_samples(std::vector<double>& values, const SimplexSampler& sampler,
                          const F& f, int workers) {
  const std::uint64_t samples = values.size();
  std::uint64_t nw = workers > 0
                         ? static_cast<std::uint64_t>(workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  nw = std::min<std::uint64_t>(nw, std::max<std::uint64_t>(samples / 1024, 1));
  if (nw <= 1) {
    for (std::uint64_t k = 0; k < samples; ++k) values[k] = f(sampler.at(k));
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nw);
  const std::uint64_t chunk = (samples + nw - 1) / nw;
  for (std::uint64_t w = 0; w < nw; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(samples, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&values, &sampler, &f, lo, hi] {
      for (std::uint64_t k = lo; k < hi; ++k) values[k] = f(sampler.at(k));
    });
  }
  for (auto& t : pool) t.join();
}

/// Index-ordered mean and standard error (two-pass), independent of how
/// the values were produced.
inline CgpEstimate reduce_estimate(const std::vector<double>& values,
                                   std::uint64_t seed, int dim) {
  CgpEstimate est;
  est.samples = values.size();
  est.seed = seed;
  est.dim = dim;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - est.mean;
      ss += d * d;
    }
    est.std_error = std::sqrt(ss / static_cast<double>(values.size() - 1)) /
                    std::sqrt(static_cast<double>(values.size()));
  }
  return est;
}

} // namespace detail

/// Monte Carlo CGP of a generic channel: the empirical mean of
/// C_r(Phi(Lambda)) over exactly `samples` uniform incoherent inputs.
/// Deterministic in (seed, samples) for any worker count.
inline CgpEstimate mc_cgp(const KrausChannel& phi, std::uint64_t samples,
                          std::uint64_t seed, int workers = 0) {
  if (samples < 100) throw BadParameter("mc_cgp needs at least 100 samples");
  if (!phi.trace_preserving()) {
    throw NotTracePreserving("mc_cgp needs a trace-preserving channel");
  }
  const SimplexSampler sampler(phi.dim(), seed);
  const detail::CgpSampleEvaluator evaluate(phi);
  std::vector<double> values(samples);
  detail::fill_indexed_samples(values, sampler, evaluate, workers);
  return detail::reduce_estimate(values, seed, phi.dim());
}

/// Upper bound Q(B(Phi)^T) for the CGP of a unital channel; coincides with
/// the exact value when the channel is a single unitary.
inline double unital_bound(const KrausChannel& phi) {
  if (!phi.unital()) {
    throw NotUnital("CGP bound requires a unital channel (defect " +
                    std::to_string(phi.unitality_defect()) + ")");
  }
  return matrix_subentropy(phi.kraus_matrix().transpose());
}

/// Estimate a unital channel's CGP and compare against its bound.
inline CgpBoundReport check_unital_bound(const KrausChannel& phi, std::uint64_t samples,
                                         std::uint64_t seed, int workers = 0) {
  CgpBoundReport report;
  report.bound = unital_bound(phi);
  report.estimate = mc_cgp(phi, samples, seed, workers);
  report.slack = report.bound - report.estimate.mean;
  report.satisfied = report.estimate.mean <=
                     report.bound + 3.0 * report.estimate.std_error + 1e-8;
  return report;
}

/// A unitary attains the maximal CGP iff every |u_ij|^2 equals 1/N,
/// i.e. B(U) = (1/N) P.
inline bool is_max_cgp_unitary(const UnitaryMatrix& u, double tol) {
  const int n = u.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(std::norm(u(i, j)) - 1.0 / n));
  return worst <= tol;
}

} // namespace cgpkit

#endif // CGPKIT_CGP_HPP
