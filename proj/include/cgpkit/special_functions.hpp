/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_SPECIAL_FUNCTIONS_HPP
#define CGPKIT_SPECIAL_FUNCTIONS_HPP

#include <array>
#include <cmath>
#include <numbers>

#include "cgpkit/errors.hpp"

namespace cgpkit {

/// N-th harmonic number H_N = 1 + 1/2 + ... + 1/N.
inline double harmonic_number(int n) {
  if (n < 1) throw BadParameter("harmonic number needs n >= 1");
  double h = 0.0;
  for (int j = 1; j <= n; ++j) h += 1.0 / j;
  return h;
}

/// ln Gamma(x) for x > 0 by the Lanczos approximation (g = 7, 9 terms),
/// with the reflection formula below x = 1/2. Relative error stays under
/// 1e-12 across [0.5, 200], which covers every Gamma ratio used here.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw BadParameter("log_gamma needs x > 0");

  static constexpr std::array<double, 9> kLanczos = {
      0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
      771.32342877765313,     -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
  static constexpr double kG = 7.0;
  static constexpr double kHalfLogTwoPi = 0.91893853320467274178; // ln(2 pi)/2

  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           log_gamma(1.0 - x);
  }

  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double base = z + kG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(base) - base + std::log(sum);
}

/// Gamma(n) Gamma(alpha + 1) / Gamma(alpha + n) through the log kernel.
inline double gamma_ratio(int n, double alpha) {
  return std::exp(log_gamma(static_cast<double>(n)) + log_gamma(alpha + 1.0) -
                  log_gamma(alpha + static_cast<double>(n)));
}

} // namespace cgpkit

#endif // CGPKIT_SPECIAL_FUNCTIONS_HPP
