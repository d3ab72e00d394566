#pragma once

#include <span>

#include "paraframe/apapr_structure.hpp"
#include "paraframe/frame_algebra.hpp"
#include "paraframe/tensor_field.hpp"

namespace paraframe {

enum class ConnectionKind { levi_civita, gsm, custom };

/// Connection coefficients in the frame: D_{e_i} e_j = sum_k Gamma^k_ij e_k.
class ConnectionCoefficients {
 public:
  ConnectionCoefficients(int dim, ConnectionKind kind);

  int dim() const { return dim_; }
  ConnectionKind kind() const { return kind_; }
  const ExactScalar& alpha() const { return alpha_; }
  const ExactScalar& beta() const { return beta_; }
  void set_gsm_parameters(ExactScalar alpha, ExactScalar beta);

  const ExactScalar& gamma(int i, int j, int k) const {
    return gamma_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  ExactScalar& gamma(int i, int j, int k) {
    return gamma_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// D_x y for constant-coefficient frame vectors.
  std::vector<ExactScalar> derivative(std::span<const ExactScalar> x,
                                      std::span<const ExactScalar> y) const;

  bool same_coefficients(const ConnectionCoefficients& other) const;

 private:
  int dim_;
  ConnectionKind kind_;
  ExactScalar alpha_, beta_;
  std::vector<ExactScalar> gamma_;
};

/// Levi-Civita connection of a constant frame metric via the Koszul pairing
/// 2 g(D_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
/// Torsion-freeness and metric compatibility are verified before returning.
ConnectionCoefficients levi_civita(const FrameAlgebra& fa, const MetricFrame& g);

/// The generalized symmetric metric connection
///   Dbar_x y = D_x y + alpha{g(x,y)xi - eta(y)x} + beta{g(phi x,y)xi - eta(y)phi x}.
/// Metric compatibility is verified before returning; a nonzero residual can
/// only arise from an invalid input structure.
ConnectionCoefficients gsm_connection(const ConnectionCoefficients& lc, const ApapRStructure& s,
                                      const ExactScalar& alpha, const ExactScalar& beta);

/// Torsion T^k_ij = Gamma^k_ij - Gamma^k_ji - c^k_ij as a (1,2) tensor with
/// slots (i, j, k), the last contravariant.
TensorField torsion(const ConnectionCoefficients& c, const FrameAlgebra& fa);

/// Recovers the unique metric connection with the given torsion from the
/// Levi-Civita connection: Dbar = D + H with
///   2 g(H(x,y),z) = g(T(x,y),z) + g(T(z,x),y) + g(T(z,y),x).
/// Pre: T antisymmetric in its covariant slots (error otherwise).
ConnectionCoefficients reconstruct_connection_from_torsion(const TensorField& T,
                                                           const ConnectionCoefficients& lc,
                                                           const MetricFrame& g);

/// Frame covariant derivatives of the structure tensors.
struct StructureDerivatives {
  TensorField dphi;  // (1,2): slots (i, j, k-up), (D_{e_i} phi) e_j
  TensorField dxi;   // (1,1): slots (i, k-up)
  TensorField deta;  // (0,2): slots (i, j)
  TensorField dg;    // (0,3): slots (i, j, k), metricity audit
};
StructureDerivatives covariant_derivative_structure(const ConnectionCoefficients& c,
                                                    const ApapRStructure& s);

}  // namespace paraframe
