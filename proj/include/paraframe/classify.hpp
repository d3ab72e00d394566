#pragma once

#include <optional>
#include <string>

#include "paraframe/curvature.hpp"
#include "paraframe/linear_system.hpp"

namespace paraframe {

enum class EinsteinKind { einstein, eta_einstein, para_einstein_like, none };
enum class SolitonKind { ricci, eta_ricci, para_ricci_like, none };

const char* to_string(EinsteinKind k);
const char* to_string(SolitonKind k);

/// Constants of the decomposition Ric = a g + b g~ + c eta(x)eta.
struct EinsteinTriple {
  ExactScalar a, b, c;
  EinsteinKind kind = EinsteinKind::none;
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<std::string> free_unknowns;  // named on underdetermined systems
};

/// Constants of (1/2) L_v g + Ric + lambda g + mu g~ + nu eta(x)eta = 0.
struct SolitonTriple {
  ExactScalar lambda, mu, nu;
  std::string potential;  // "xi", "k*xi", or an explicit vector rendering
  SolitonKind kind = SolitonKind::none;
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<std::string> free_unknowns;
};

/// Kind predicates; einstein implies eta_einstein implies para_einstein_like.
bool is_einstein(const EinsteinTriple& t);
bool is_eta_einstein(const EinsteinTriple& t);
bool is_para_einstein_like(const EinsteinTriple& t);
bool is_ricci_soliton(const SolitonTriple& t);
bool is_eta_ricci_soliton(const SolitonTriple& t);
bool is_para_ricci_like_soliton(const SolitonTriple& t);

/// (L_v g)(x,y) = g(D_x v, y) + g(x, D_y v) for a constant-coefficient
/// potential v, evaluated with the supplied connection coefficients.
TensorField lie_derivative_metric(std::span<const ExactScalar> v, const ConnectionCoefficients& conn,
                                  const MetricFrame& g);

/// Potential shapes supported by the closed-form branch of the transferred
/// Lie derivative: the Reeb field itself or a constant multiple of it.
struct Potential {
  enum class Shape { reeb, collinear } shape = Shape::reeb;
  ExactScalar k;  // used by collinear
  static Potential reeb() { return {Shape::reeb, ExactScalar(1)}; }
  static Potential collinear(ExactScalar k) { return {Shape::collinear, std::move(k)}; }
  std::vector<ExactScalar> components(const ApapRStructure& s) const;
  std::string describe() const;
};

/// Transferred Lie derivative of g along v = xi or v = k xi, computed from the
/// transferred connection coefficients and verified against the closed form
///   L_xi g - 2 alpha g(phi x, phi y) - 2 beta g(phi x, y)            (v = xi)
///   L_v g + 2 alpha k eta(x)eta(y) - 2 alpha k g - 2 beta k g(x,phi y) (v = k xi)
/// before returning.
TensorField gsm_lie_derivative(const Potential& v, const ConnectionCoefficients& gsm,
                               const ConnectionCoefficients& lc, const ApapRStructure& s,
                               const ExactScalar& alpha, const ExactScalar& beta);

/// Exact solve of Ric = a g + b g~ + c eta(x)eta over all components.
EinsteinTriple solve_einstein_like(const TensorField& ric, const ApapRStructure& s);

/// Exact solve of (1/2) L_v g + Ric + lambda g + mu g~ + nu eta(x)eta = 0.
SolitonTriple solve_soliton(const TensorField& lie_vg, const TensorField& ric,
                            const ApapRStructure& s, std::string potential_label);

/// Closed-form transfer of para-Einstein-like constants (a,b,c) from the
/// Levi-Civita connection to the generalized symmetric metric connection.
EinsteinTriple einstein_transfer_constants(const ExactScalar& a, const ExactScalar& b,
                                           const ExactScalar& c, int n, const ExactScalar& alpha,
                                           const ExactScalar& beta);

/// Closed-form transfer of soliton constants for the Reeb potential.
SolitonTriple soliton_transfer_constants(const ExactScalar& a, const ExactScalar& b,
                                         const ExactScalar& c, int n, const ExactScalar& alpha,
                                         const ExactScalar& beta);

/// Closed-form transfer of soliton constants for a collinear potential v = k xi,
/// exactly as published (the k-dependence is adjudicated against the direct
/// solve by the cross-check suite, never silently patched).
SolitonTriple collinear_soliton_transfer_constants(const ExactScalar& a, const ExactScalar& b,
                                                   const ExactScalar& c, const ExactScalar& k,
                                                   int n, const ExactScalar& alpha,
                                                   const ExactScalar& beta);

}  // namespace paraframe
