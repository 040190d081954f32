/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_KRAUS_CHANNEL_HPP
#define CGPKIT_KRAUS_CHANNEL_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/density_matrix.hpp"
#include "cgpkit/errors.hpp"
#include "cgpkit/gates.hpp"
#include "cgpkit/json_format.hpp"
#include "cgpkit/rng.hpp"
#include "cgpkit/simplex_sampler.hpp"
#include "cgpkit/stochastic_matrix.hpp"

namespace cgpkit {

inline constexpr double kChannelTolerance = 1e-10;

/// Completely positive map in Kraus form, rho -> sum_mu M_mu rho M_mu^H.
///
/// channel() certifies trace preservation (sum M^H M = I); unitality
/// (sum M M^H = I) is always certified numerically, never declared by the
/// caller. dual() produces the adjoint map sum M^H . M, which for a
/// trace-preserving input is unital as a map but trace-preserving only if
/// the input was unital -- so duals are carried as uncertified maps with
/// their defects recorded.
class KrausChannel {
public:
  static KrausChannel channel(std::vector<ComplexMatrix> ops) {
    KrausChannel c(std::move(ops));
    if (c.tp_defect_ > kChannelTolerance) {
      throw NotTracePreserving("kraus operators: max |sum M^H M - I| = " +
                               std::to_string(c.tp_defect_));
    }
    return c;
  }

  /// Kraus map without the trace-preservation certificate (duals live here).
  static KrausChannel map(std::vector<ComplexMatrix> ops) {
    return KrausChannel(std::move(ops));
  }

  static KrausChannel unitary(const UnitaryMatrix& u) {
    return channel({u.matrix()});
  }

  /// Full dephasing: Kraus set {|i><i|}.
  static KrausChannel dephasing(int n) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(n);
    for (int i = 0; i < n; ++i) {
      ComplexMatrix m(n, n);
      m(i, i) = 1.0;
      ops.push_back(std::move(m));
    }
    return channel(std::move(ops));
  }

  int dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }

  bool trace_preserving() const noexcept { return tp_defect_ <= kChannelTolerance; }
  bool unital() const noexcept { return unital_defect_ <= kChannelTolerance; }
  double trace_preservation_defect() const noexcept { return tp_defect_; }
  double unitality_defect() const noexcept { return unital_defect_; }

  /// Single-Kraus channel whose operator is unitary.
  bool unitary_channel() const noexcept {
    return ops_.size() == 1 && trace_preserving() && unital();
  }

  /// Raw action sum_mu M_mu X M_mu^H on an arbitrary matrix.
  ComplexMatrix apply_matrix(const ComplexMatrix& x) const {
    if (x.rows() != dim_ || x.cols() != dim_) {
      throw DimensionMismatch("channel input dimension mismatch");
    }
    ComplexMatrix out(dim_, dim_);
    for (const ComplexMatrix& m : ops_) {
      out += m * x * m.adjoint();
    }
    return out;
  }

  DensityMatrix apply(const DensityMatrix& rho) const {
    return DensityMatrix::trusted(apply_matrix(rho.matrix()));
  }

  /// Adjoint map Phi*: Tr[X Phi*(Y)] = Tr[Phi(X) Y]; Kraus set {M_mu^H}.
  KrausChannel dual() const {
    std::vector<ComplexMatrix> adj;
    adj.reserve(ops_.size());
    for (const ComplexMatrix& m : ops_) adj.push_back(m.adjoint());
    return map(std::move(adj));
  }

  /// Raw entries of B(Phi) = sum_mu M_mu (Schur) conj(M_mu), row-major.
  std::vector<double> kraus_matrix_entries() const {
    std::vector<double> b(static_cast<std::size_t>(dim_) * dim_, 0.0);
    for (const ComplexMatrix& m : ops_) {
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          b[static_cast<std::size_t>(i) * dim_ + j] += std::norm(m(i, j));
    }
    return b;
  }

  /// B(Phi) as a certified stochastic matrix; bi-stochastic exactly when
  /// the channel is unital. Governs the diagonal action p = B(Phi) lambda.
  StochasticMatrix kraus_matrix() const {
    return StochasticMatrix(dim_, kraus_matrix_entries());
  }

private:
  explicit KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw BadParameter("channel needs at least one Kraus operator");
    dim_ = ops_.front().rows();
    for (std::size_t k = 0; k < ops_.size(); ++k) {
      const ComplexMatrix& m = ops_[k];
      if (m.rows() != dim_ || m.cols() != dim_) {
        throw DimensionMismatch("kraus operator " + std::to_string(k) +
                                " is not " + std::to_string(dim_) + "x" +
                                std::to_string(dim_));
      }
      if (!m.all_finite()) {
        throw BadParameter("kraus operator " + std::to_string(k) +
                           " has non-finite entries");
      }
    }
    ComplexMatrix mhm(dim_, dim_);
    ComplexMatrix mmh(dim_, dim_);
    for (const ComplexMatrix& m : ops_) {
      const ComplexMatrix adj = m.adjoint();
      mhm += adj * m;
      mmh += m * adj;
    }
    const ComplexMatrix id = ComplexMatrix::identity(dim_);
    tp_defect_ = max_abs_diff(mhm, id);
    unital_defect_ = max_abs_diff(mmh, id);
  }

  std::vector<ComplexMatrix> ops_;
  int dim_ = 0;
  double tp_defect_ = 0.0;
  double unital_defect_ = 0.0;
};

/// Random convex mixture of Haar unitaries, sum_j w_j Ad_{U_j}, with Kraus
/// operators sqrt(w_j) U_j. Always unital.
inline KrausChannel random_unital_channel(int dim, int num_unitaries, std::uint64_t seed) {
  if (num_unitaries < 1) throw BadParameter("mixture needs at least one unitary");
  std::vector<double> weights;
  if (num_unitaries == 1) {
    weights.push_back(1.0);
  } else {
    SimplexSampler sampler(num_unitaries, mix64(seed ^ 0x77656967687473ULL));
    weights = sampler.at(0).entries();
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(num_unitaries);
  for (int j = 0; j < num_unitaries; ++j) {
    const UnitaryMatrix u = random_unitary(dim, keyed_word(seed, j, 0x756eULL));
    ops.push_back(u.matrix() * Complex(std::sqrt(weights[j]), 0.0));
  }
  return KrausChannel::channel(std::move(ops));
}

/// Load {"dim", "unitary"} or {"dim", "kraus"} as a channel; a unitary file
/// becomes the single-Kraus channel Ad_U.
inline KrausChannel channel_from_file(const std::string& path) {
  const GateDocument doc = load_gate_document(path);
  if (doc.unitary) {
    return KrausChannel::unitary(UnitaryMatrix(*doc.unitary));
  }
  return KrausChannel::channel(doc.kraus);
}

} // namespace cgpkit

#endif // CGPKIT_KRAUS_CHANNEL_HPP
