#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paraframe/exact_scalar.hpp"

namespace paraframe {

/// Lie algebra of dimension N in a fixed frame e_0..e_{N-1}, described by its
/// structure constants: [e_i, e_j] = sum_k c^k_ij e_k. Antisymmetry is
/// enforced by construction; the Jacobi identity is checked on demand.
class FrameAlgebra {
 public:
  explicit FrameAlgebra(std::vector<std::string> frame_names);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  /// Sets [e_i, e_j] (i != j) and its antisymmetric partner.
  void set_bracket(int i, int j, std::vector<ExactScalar> components);

  /// c^k_ij
  const ExactScalar& c(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * names_.size() + j) * names_.size() + k];
  }

  /// Bilinear extension of the structure constants to constant-coefficient
  /// frame vectors.
  std::vector<ExactScalar> bracket(std::span<const ExactScalar> x,
                                   std::span<const ExactScalar> y) const;

  struct JacobiViolation {
    int i, j, k, component;
    ExactScalar residual;
  };
  /// First index triple (and output component) where the cyclic Jacobi sum is
  /// nonzero, or nullopt for a genuine Lie algebra.
  std::optional<JacobiViolation> first_jacobi_violation() const;
  bool satisfies_jacobi() const { return !first_jacobi_violation().has_value(); }

 private:
  std::vector<std::string> names_;
  std::vector<ExactScalar> c_;
};

}  // namespace paraframe
