#include "subcond/matrix.hpp"

#include <stdexcept>

namespace subcond {

namespace {

template <class MatT>
void check_entries(const MatT& m) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw std::invalid_argument("Matrix: dimensions must be positive");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("Matrix: NaN/Inf entries are not accepted");
  }
}

}  // namespace

Matrix Matrix::from_real(RealMatrix m) {
  check_entries(m);
  return Matrix(std::move(m));
}

Matrix Matrix::from_complex(ComplexMatrix m) {
  check_entries(m);
  return Matrix(std::move(m));
}

Index Matrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, data_);
}

Index Matrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, data_);
}

const RealMatrix& Matrix::real() const {
  if (!is_real()) throw std::logic_error("Matrix: real() on a complex matrix");
  return std::get<RealMatrix>(data_);
}

const ComplexMatrix& Matrix::complex() const {
  if (is_real()) throw std::logic_error("Matrix: complex() on a real matrix");
  return std::get<ComplexMatrix>(data_);
}

ComplexMatrix Matrix::as_complex() const {
  if (is_real()) return real().cast<Complex>();
  return complex();
}

double Matrix::frobenius_norm() const {
  return std::visit([](const auto& m) { return m.norm(); }, data_);
}

Matrix Matrix::adjoint() const {
  if (is_real()) return Matrix(RealMatrix(real().transpose()));
  return Matrix(ComplexMatrix(complex().adjoint()));
}

Matrix Matrix::plus_scaled(double t, const Matrix& other) const {
  if (field() != other.field()) {
    throw std::invalid_argument("Matrix: mixed-field arithmetic");
  }
  if (rows() != other.rows() || cols() != other.cols()) {
    throw std::invalid_argument("Matrix: shape mismatch");
  }
  if (is_real()) return from_real(real() + t * other.real());
  return from_complex(complex() + t * other.complex());
}

Matrix Matrix::scaled(double s) const {
  if (is_real()) return from_real(RealMatrix(s * real()));
  return from_complex(ComplexMatrix(s * complex()));
}

}  // namespace subcond
