/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_GATES_HPP
#define CGPKIT_GATES_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "cgpkit/complex_matrix.hpp"
#include "cgpkit/errors.hpp"
#include "cgpkit/json_format.hpp"
#include "cgpkit/rng.hpp"

namespace cgpkit {

inline UnitaryMatrix identity_gate(int n) {
  if (n < 1) throw BadParameter("identity gate needs n >= 1");
  return UnitaryMatrix(ComplexMatrix::identity(n));
}

inline UnitaryMatrix hadamard_gate() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m(0, 0) = r;
  m(0, 1) = r;
  m(1, 0) = r;
  m(1, 1) = -r;
  return UnitaryMatrix(std::move(m));
}

/// Real rotation [[cos, sin], [-sin, cos]].
inline UnitaryMatrix rotation_gate(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix m(2, 2);
  m(0, 0) = c;
  m(0, 1) = s;
  m(1, 0) = -s;
  m(1, 1) = c;
  return UnitaryMatrix(std::move(m));
}

/// S = sum_ij |ij><ji| on C^d x C^d.
inline UnitaryMatrix swap_gate(int d) {
  if (d < 2) throw BadParameter("swap gate needs local dimension d >= 2");
  const int n = d * d;
  ComplexMatrix m(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i * d + j, j * d + i) = 1.0;
  return UnitaryMatrix(std::move(m));
}

inline UnitaryMatrix sqrt_swap_gate() {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(1, 1) = Complex(0.5, 0.5);
  m(1, 2) = Complex(0.5, -0.5);
  m(2, 1) = Complex(0.5, -0.5);
  m(2, 2) = Complex(0.5, 0.5);
  return UnitaryMatrix(std::move(m));
}

/// U_t = sqrt(t) I x I + i sqrt(1-t) S on C^d x C^d, t in [0, 1].
inline UnitaryMatrix partial_swap_gate(double t, int d = 2) {
  if (!(t >= 0.0 && t <= 1.0)) throw BadParameter("partial swap needs t in [0, 1]");
  if (d < 2) throw BadParameter("partial swap needs local dimension d >= 2");
  const int n = d * d;
  const double rt = std::sqrt(t);
  const Complex irt1(0.0, std::sqrt(1.0 - t));
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = rt;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i * d + j, j * d + i) += irt1;
  return UnitaryMatrix(std::move(m));
}

/// Discrete Fourier matrix, entries e^{2 pi i jk / N} / sqrt(N). Every
/// squared modulus equals 1/N, so this gate realizes the maximal CGP.
inline UnitaryMatrix fourier_gate(int n) {
  if (n < 1) throw BadParameter("fourier gate needs n >= 1");
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double phase = 2.0 * std::numbers::pi * ((j * k) % n) / n;
      m(j, k) = Complex(r * std::cos(phase), r * std::sin(phase));
    }
  }
  return UnitaryMatrix(std::move(m));
}

/// The qubit family with all squared moduli equal to 1/2:
///   (1/sqrt 2) e^{i phi} [[e^{i theta}, -e^{-i gamma}], [e^{i gamma}, e^{-i theta}]].
/// Every member attains the maximal CGP ln 2 - 1/2.
inline UnitaryMatrix max_cgp_qubit_gate(double phi, double theta, double gamma) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex g = Complex(std::cos(phi), std::sin(phi)) * r;
  ComplexMatrix m(2, 2);
  m(0, 0) = g * Complex(std::cos(theta), std::sin(theta));
  m(0, 1) = -g * Complex(std::cos(gamma), -std::sin(gamma));
  m(1, 0) = g * Complex(std::cos(gamma), std::sin(gamma));
  m(1, 1) = g * Complex(std::cos(theta), -std::sin(theta));
  return UnitaryMatrix(std::move(m));
}

/// Haar-random unitary: complex Ginibre matrix orthonormalized by modified
/// Gram-Schmidt. The triangular factor's diagonal is real positive by
/// construction, which is exactly the phase fixing that makes Q Haar.
inline UnitaryMatrix random_unitary(int n, std::uint64_t seed) {
  if (n < 2) throw BadParameter("random unitary needs n >= 2");
  KeyedStream stream(seed, 0x756e6974617279ULL); // draw lanes for one matrix
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Complex(stream.gaussian(), stream.gaussian());

  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (int i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
      for (int i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) g(i, j) /= norm;
  }
  return UnitaryMatrix(std::move(g));
}

/// Gate selector, parseable from the CLI string form
/// "name[:param[:param]]", e.g. "rotation:0.785", "partial-swap:0.5:2",
/// "fourier:4", "custom:path.json".
struct GateSpec {
  enum class Kind {
    identity,
    hadamard,
    rotation,
    sqrt_swap,
    partial_swap,
    swap_full,
    fourier,
    custom
  };

  Kind kind = Kind::identity;
  int dim = 2;          // identity/fourier size
  double theta = 0.0;   // rotation angle, radians
  double t = 0.5;       // partial swap weight
  int local_dim = 2;    // swap / partial swap local dimension
  std::string file;     // custom gate path

  static GateSpec parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = text.find(':', start);
      if (colon == std::string::npos) {
        parts.push_back(text.substr(start));
        break;
      }
      parts.push_back(text.substr(start, colon - start));
      start = colon + 1;
    }
    const std::string& name = parts[0];
    const auto arg = [&parts](std::size_t i) -> const std::string& {
      if (i >= parts.size()) throw BadParameter("gate \"" + parts[0] + "\" needs a parameter");
      return parts[i];
    };
    const auto to_double = [](const std::string& s) {
      try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw BadParameter("bad numeric gate parameter: " + s);
        return v;
      } catch (const std::exception&) {
        throw BadParameter("bad numeric gate parameter: " + s);
      }
    };
    const auto to_int = [&to_double](const std::string& s) {
      const double v = to_double(s);
      const int n = static_cast<int>(v);
      if (static_cast<double>(n) != v) throw BadParameter("gate parameter must be an integer: " + s);
      return n;
    };

    GateSpec spec;
    if (name == "identity") {
      spec.kind = Kind::identity;
      spec.dim = parts.size() > 1 ? to_int(arg(1)) : 2;
    } else if (name == "hadamard") {
      spec.kind = Kind::hadamard;
    } else if (name == "rotation") {
      spec.kind = Kind::rotation;
      spec.theta = to_double(arg(1));
    } else if (name == "sqrt-swap") {
      spec.kind = Kind::sqrt_swap;
    } else if (name == "partial-swap") {
      spec.kind = Kind::partial_swap;
      spec.t = to_double(arg(1));
      spec.local_dim = parts.size() > 2 ? to_int(arg(2)) : 2;
    } else if (name == "swap") {
      spec.kind = Kind::swap_full;
      spec.local_dim = parts.size() > 1 ? to_int(arg(1)) : 2;
    } else if (name == "fourier") {
      spec.kind = Kind::fourier;
      spec.dim = to_int(arg(1));
    } else if (name == "custom") {
      spec.kind = Kind::custom;
      spec.file = arg(1);
    } else {
      throw BadParameter("unknown gate: " + name);
    }
    return spec;
  }
};

inline UnitaryMatrix make_gate(const GateSpec& spec) {
  switch (spec.kind) {
    case GateSpec::Kind::identity:
      return identity_gate(spec.dim);
    case GateSpec::Kind::hadamard:
      return hadamard_gate();
    case GateSpec::Kind::rotation:
      return rotation_gate(spec.theta);
    case GateSpec::Kind::sqrt_swap:
      return sqrt_swap_gate();
    case GateSpec::Kind::partial_swap:
      return partial_swap_gate(spec.t, spec.local_dim);
    case GateSpec::Kind::swap_full:
      return swap_gate(spec.local_dim);
    case GateSpec::Kind::fourier:
      return fourier_gate(spec.dim);
    case GateSpec::Kind::custom: {
      const GateDocument doc = load_gate_document(spec.file);
      if (!doc.unitary) throw ParseError(spec.file + ": custom gate file needs a \"unitary\" field");
      return UnitaryMatrix(*doc.unitary);
    }
  }
  throw BadParameter("unknown gate kind");
}

} // namespace cgpkit

#endif // CGPKIT_GATES_HPP
