#include "paraframe/jets.hpp"

#include <sstream>
#include <stdexcept>

#include "paraframe/errors.hpp"

namespace paraframe {

FunctionJet::FunctionJet(ExactScalar value, std::vector<ExactScalar> first, PolyMatrix second)
    : value_(std::move(value)), first_(std::move(first)), second_(std::move(second)) {
  const int n = static_cast<int>(first_.size());
  if (second_.rows() != n || second_.cols() != n)
    throw std::invalid_argument("jet second-derivative matrix has wrong shape");
}

FunctionJet FunctionJet::constant(int dim, ExactScalar value) {
  return FunctionJet(std::move(value), std::vector<ExactScalar>(dim), PolyMatrix(dim, dim));
}

std::optional<FunctionJet::ConsistencyViolation> FunctionJet::first_consistency_violation(
    const FrameAlgebra& fa) const {
  const int n = dim();
  if (fa.dim() != n) throw std::invalid_argument("jet/frame dimension mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExactScalar r = d2(i, j) - d2(j, i);
      for (int k = 0; k < n; ++k) r -= fa.c(i, j, k) * d1(k);
      if (!r.is_zero()) return ConsistencyViolation{i, j, std::move(r)};
    }
  return std::nullopt;
}

namespace {

ExactScalar divergence(const ConnectionCoefficients& conn, std::span<const ExactScalar> comps,
                       const PolyMatrix* dcomps) {
  const int n = conn.dim();
  ExactScalar out;
  for (int i = 0; i < n; ++i) {
    if (dcomps) out += dcomps->at(i, i);
    for (int m = 0; m < n; ++m)
      if (!comps[m].is_zero()) out += conn.gamma(i, m, i) * comps[m];
  }
  return out;
}

PolyMatrix hessian(const ConnectionCoefficients& conn, const MetricFrame& g,
                   std::span<const ExactScalar> grad, const PolyMatrix& dgrad) {
  const int n = conn.dim();
  PolyMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactScalar v;
      for (int m = 0; m < n; ++m) {
        ExactScalar dm = dgrad.at(i, m);
        for (int s = 0; s < n; ++s) dm += conn.gamma(i, s, m) * grad[s];
        v += dm * g.at(m, j);
      }
      h.at(i, j) = std::move(v);
    }
  return h;
}

std::string scalar_line(const char* name, const ExactScalar& v) {
  return std::string(name) + " = " + v.str() + "\n";
}

std::string matrix_table(const PolyMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out << "(" << i << "," << j << ") = " << m.at(i, j).str() << "\n";
  return out.str();
}

}  // namespace

JetOperators jet_operators(const FunctionJet& jet, std::span<const ExactScalar> x,
                           const ApapRStructure& s, const ConnectionCoefficients& lc,
                           const FrameAlgebra& fa, const ExactScalar& alpha,
                           const ExactScalar& beta) {
  const int N = jet.dim();
  if (static_cast<int>(x.size()) != N || s.dim() != N || lc.dim() != N)
    throw std::invalid_argument("jet_operators: dimension mismatch");
  if (auto bad = jet.first_consistency_violation(fa)) {
    throw ValidationError("jet is inconsistent with the structure constants at (" +
                          std::to_string(bad->i) + "," + std::to_string(bad->j) +
                          "): residual " + bad->residual.str());
  }
  const int n = (N - 1) / 2;
  const MetricFrame& g = s.metric();
  const ConnectionCoefficients gsm = gsm_connection(lc, s, alpha, beta);

  // grad f and its frame derivatives (the metric is constant in the frame).
  std::vector<ExactScalar> grad(N);
  PolyMatrix dgrad(N, N);
  for (int m = 0; m < N; ++m)
    for (int j = 0; j < N; ++j) {
      if (g.inv(m, j).is_zero()) continue;
      grad[m] += g.inv(m, j) * jet.d1(j);
      for (int i = 0; i < N; ++i) dgrad.at(i, m) += g.inv(m, j) * jet.d2(i, j);
    }
  ExactScalar xi_f;
  for (int i = 0; i < N; ++i) xi_f += s.xi()[i] * jet.d1(i);
  ExactScalar eta_x;
  for (int i = 0; i < N; ++i) eta_x += s.eta()[i] * x[i];

  JetOperators out;
  out.divergence_lc = divergence(lc, x, nullptr);
  out.divergence_gsm = divergence(gsm, x, nullptr);
  out.hessian_lc = hessian(lc, g, grad, dgrad);
  out.hessian_gsm = hessian(gsm, g, grad, dgrad);
  out.laplacian_lc = divergence(lc, grad, &dgrad);
  out.laplacian_gsm = divergence(gsm, grad, &dgrad);

  // Connection-transfer corrections in closed form, checked against the
  // direct computations above.
  const ExactScalar div_cf = out.divergence_lc - ExactScalar(2 * n) * alpha * eta_x;
  if (!(div_cf == out.divergence_gsm))
    throw InternalConsistencyError("divergence transfer disagrees with the direct computation",
                                   scalar_line("closed form", div_cf),
                                   scalar_line("direct", out.divergence_gsm));

  PolyMatrix hess_cf(N, N);
  for (int i = 0; i < N; ++i) {
    ExactScalar phix_f;  // (phi e_i) f
    for (int m = 0; m < N; ++m) phix_f += s.phi().at(m, i) * jet.d1(m);
    for (int j = 0; j < N; ++j) {
      ExactScalar gphixy;  // g(phi e_i, e_j)
      for (int m = 0; m < N; ++m) gphixy += s.phi().at(m, i) * g.at(m, j);
      hess_cf.at(i, j) = out.hessian_lc.at(i, j) + alpha * jet.d1(i) * s.eta()[j] -
                         alpha * xi_f * g.at(i, j) + beta * phix_f * s.eta()[j] -
                         beta * xi_f * gphixy;
    }
  }
  if (!(hess_cf == out.hessian_gsm))
    throw InternalConsistencyError("Hessian transfer disagrees with the direct computation",
                                   matrix_table(hess_cf), matrix_table(out.hessian_gsm));

  const ExactScalar lap_cf = out.laplacian_lc - ExactScalar(2 * n) * alpha * xi_f;
  if (!(lap_cf == out.laplacian_gsm))
    throw InternalConsistencyError("Laplacian transfer disagrees with the direct computation",
                                   scalar_line("closed form", lap_cf),
                                   scalar_line("direct", out.laplacian_gsm));
  return out;
}

}  // namespace paraframe
