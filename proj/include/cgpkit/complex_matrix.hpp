/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CGPKIT_COMPLEX_MATRIX_HPP
#define CGPKIT_COMPLEX_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "cgpkit/errors.hpp"

namespace cgpkit {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Square in all uses here, but rows/cols
/// are kept separate so shape errors surface as errors rather than UB.
class ComplexMatrix {
public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0)) {
    if (rows < 1 || cols < 1) throw BadParameter("matrix dimensions must be positive");
  }

  ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw BadParameter("matrix dimensions must be positive");
    if (a_.size() != static_cast<std::size_t>(rows) * cols) {
      throw DimensionMismatch("matrix entry count does not match shape");
    }
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix zero(int n) { return ComplexMatrix(n, n); }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<Complex>& data() const noexcept { return a_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  bool all_finite() const {
    for (const Complex& z : a_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    ComplexMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const Complex aik = (*this)(i, k);
        if (aik == Complex(0.0, 0.0)) continue;
        for (int j = 0; j < rhs.cols_; ++j) r(i, j) += aik * rhs(k, j);
      }
    }
    return r;
  }

  ComplexMatrix operator*(Complex s) const {
    ComplexMatrix r = *this;
    for (Complex& z : r.a_) z *= s;
    return r;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
  }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const {
    ComplexMatrix r = *this;
    r += rhs;
    return r;
  }

  ComplexMatrix operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw DimensionMismatch("matrix difference shape mismatch");
    ComplexMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= rhs.a_[k];
    return r;
  }

private:
  int rows_;
  int cols_;
  std::vector<Complex> a_;
};

inline ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

/// max_ij |a_ij - b_ij|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix comparison shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("hermiticity check needs a square matrix");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = 1e-10) {
  return hermiticity_defect(a) <= tol;
}

inline double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatch("unitarity check needs a square matrix");
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

/// Square matrix certified unitary at construction.
class UnitaryMatrix {
public:
  explicit UnitaryMatrix(ComplexMatrix m, double tol = 1e-10) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("unitary matrix must be square");
    if (!m_.all_finite()) throw NotUnitary("matrix has non-finite entries");
    const double defect = unitarity_defect(m_);
    if (defect > tol) {
      throw NotUnitary("unitarity check failed: max |U^H U - I| = " +
                       std::to_string(defect));
    }
  }

  int dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

private:
  ComplexMatrix m_;
};

} // namespace cgpkit

#endif // CGPKIT_COMPLEX_MATRIX_HPP
