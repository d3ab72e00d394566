#pragma once

#include "paraframe/matrix.hpp"

namespace paraframe {

/// Constant symmetric metric in the frame, exactly invertible. The inverse is
/// computed once at construction; the workbench requires it to stay inside the
/// polynomial ring (rational and unimodular-polynomial metrics qualify).
class MetricFrame {
 public:
  explicit MetricFrame(PolyMatrix components);
  static MetricFrame identity(int n);

  int dim() const { return g_.rows(); }
  const ExactScalar& at(int i, int j) const { return g_.at(i, j); }
  const ExactScalar& inv(int i, int j) const { return ginv_.at(i, j); }
  const PolyMatrix& components() const { return g_; }
  const PolyMatrix& inverse() const { return ginv_; }
  const ExactScalar& determinant() const { return det_; }

  bool operator==(const MetricFrame& rhs) const { return g_ == rhs.g_; }

 private:
  PolyMatrix g_, ginv_;
  ExactScalar det_;
};

/// Signature of a rational symmetric matrix by exact congruence
/// diagonalization: (positive, negative, zero) pivot counts.
struct Signature {
  int positive = 0, negative = 0, zero = 0;
};
Signature rational_signature(const PolyMatrix& symmetric);

/// True when every entry is a parameter-free rational.
bool all_rational(const PolyMatrix& m);

}  // namespace paraframe
