#pragma once

#include <optional>
#include <vector>

#include "paraframe/exact_scalar.hpp"

namespace paraframe {

/// Dense matrix over the polynomial ring.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static PolyMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ExactScalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const ExactScalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  PolyMatrix operator+(const PolyMatrix& rhs) const;
  PolyMatrix operator-(const PolyMatrix& rhs) const;
  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix transposed() const;
  bool is_zero() const;
  bool is_symmetric() const;

  /// Fraction-free Bareiss determinant; all intermediate divisions are exact.
  ExactScalar determinant() const;

  /// Exact inverse when it exists within the polynomial ring: adjugate entries
  /// must all be exactly divisible by the determinant. Returns nullopt when
  /// the matrix is singular or the inverse has genuinely fractional entries.
  std::optional<PolyMatrix> polynomial_inverse() const;

  bool operator==(const PolyMatrix& rhs) const = default;

 private:
  int rows_, cols_;
  std::vector<ExactScalar> a_;
};

}  // namespace paraframe
