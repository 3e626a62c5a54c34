#pragma once

#include <variant>

#include "subcond/types.hpp"

namespace subcond {

/// Dense m x n matrix over the reals or the complex numbers.
///
/// Entries are validated at construction: matrices with NaN or Inf entries
/// are rejected, so the Frobenius norm of any Matrix is finite. Values are
/// immutable after construction and safe to share across threads.
class Matrix {
 public:
  Matrix() : data_(RealMatrix()) {}

  /// Wraps a real matrix. Throws std::invalid_argument on empty or
  /// non-finite input.
  static Matrix from_real(RealMatrix m);

  /// Wraps a complex matrix. Same validation as from_real.
  static Matrix from_complex(ComplexMatrix m);

  Field field() const {
    return std::holds_alternative<RealMatrix>(data_) ? Field::Real
                                                     : Field::Complex;
  }
  bool is_real() const { return field() == Field::Real; }

  Index rows() const;
  Index cols() const;

  /// Underlying storage. Calling the accessor of the wrong field throws
  /// std::logic_error.
  const RealMatrix& real() const;
  const ComplexMatrix& complex() const;

  /// Copy promoted to complex storage (imaginary part zero for real input).
  ComplexMatrix as_complex() const;

  double frobenius_norm() const;

  /// Conjugate transpose.
  Matrix adjoint() const;

  /// this + t * other. Both operands must have the same field and shape.
  Matrix plus_scaled(double t, const Matrix& other) const;

  /// s * this.
  Matrix scaled(double s) const;

 private:
  explicit Matrix(RealMatrix m) : data_(std::move(m)) {}
  explicit Matrix(ComplexMatrix m) : data_(std::move(m)) {}

  std::variant<RealMatrix, ComplexMatrix> data_;
};

}  // namespace subcond
