#pragma once

#include "paraframe/connection.hpp"

namespace paraframe {

/// Curvature of a constant-coefficient frame connection, in the convention
/// R(x,y)z = D_x D_y z - D_y D_x z - D_[x,y] z.
struct CurvatureData {
  TensorField riemann;  // (1,3): slots (i, j, k, l-up), R(e_i,e_j)e_k = R^l_ijk e_l
  TensorField lowered;  // (0,4): R_ijkl = g(R(e_i,e_j)e_k, e_l)
};

CurvatureData curvature(const ConnectionCoefficients& c, const FrameAlgebra& fa,
                        const MetricFrame& g);

/// Closed-form curvature of the generalized symmetric metric connection with
/// constant parameters, expressed through the Levi-Civita curvature. Derived
/// under the para-Sasaki-like hypothesis; refuses other bases.
CurvatureData gsm_curvature_closed_form(const CurvatureData& lc_curvature, const FrameAlgebra& fa,
                                        const ApapRStructure& s, const ExactScalar& alpha,
                                        const ExactScalar& beta);

/// Ricci tensor in the first-slot contraction convention
/// Ric(x,y) = sum_i Rbar(e_i, x, y, e_i), weighted with the exact inverse
/// metric for non-orthonormal frames.
TensorField ricci(const CurvatureData& curv, const MetricFrame& g);

/// Closed-form Ricci transfer for the generalized symmetric metric connection
/// on a para-Sasaki-like base (refused otherwise).
TensorField gsm_ricci_closed_form(const TensorField& ricci_lc, const FrameAlgebra& fa,
                                  const ApapRStructure& s, const ExactScalar& alpha,
                                  const ExactScalar& beta);

/// Full g-inverse-weighted trace of the Ricci tensor.
ExactScalar scalar_curvature(const TensorField& ric, const MetricFrame& g);

/// Residual of the para-Sasaki-like defining identity
/// (D_x phi)y = -g(x,y)xi - eta(y)x + 2 eta(x)eta(y)xi for the Levi-Civita
/// connection; the structure is para-Sasaki-like iff the residual vanishes.
struct ParaSasakiResult {
  bool flag = false;
  TensorField residual;  // (1,2), slots (i, j, k-up)
};
ParaSasakiResult is_para_sasaki_like(const ApapRStructure& s, const ConnectionCoefficients& lc);

}  // namespace paraframe
