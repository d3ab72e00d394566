#pragma once

#include <optional>
#include <span>

#include "paraframe/connection.hpp"

namespace paraframe {

/// Pointwise 2-jet of a scalar function in the frame: value, first frame
/// derivatives e_i f, and second frame derivatives e_i e_j f. The second
/// derivatives are not symmetric; they must satisfy
/// e_i e_j f - e_j e_i f = [e_i, e_j] f against the structure constants.
class FunctionJet {
 public:
  FunctionJet(ExactScalar value, std::vector<ExactScalar> first, PolyMatrix second);
  static FunctionJet constant(int dim, ExactScalar value);

  int dim() const { return static_cast<int>(first_.size()); }
  const ExactScalar& value() const { return value_; }
  const ExactScalar& d1(int i) const { return first_[i]; }
  const ExactScalar& d2(int i, int j) const { return second_.at(i, j); }

  struct ConsistencyViolation {
    int i, j;
    ExactScalar residual;
  };
  std::optional<ConsistencyViolation> first_consistency_violation(const FrameAlgebra& fa) const;

 private:
  ExactScalar value_;
  std::vector<ExactScalar> first_;
  PolyMatrix second_;
};

/// Divergence, Hessian and Laplacian with respect to both the Levi-Civita
/// connection and the generalized symmetric metric connection. The
/// connection-transfer corrections are applied in closed form and verified
/// against the direct computation from the transferred coefficients before
/// returning.
struct JetOperators {
  ExactScalar divergence_lc;
  ExactScalar divergence_gsm;
  PolyMatrix hessian_lc;
  PolyMatrix hessian_gsm;
  ExactScalar laplacian_lc;
  ExactScalar laplacian_gsm;
};

JetOperators jet_operators(const FunctionJet& jet, std::span<const ExactScalar> x,
                           const ApapRStructure& s, const ConnectionCoefficients& lc,
                           const FrameAlgebra& fa, const ExactScalar& alpha,
                           const ExactScalar& beta);

}  // namespace paraframe
