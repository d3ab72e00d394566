#include "paraframe/curvature.hpp"

#include <stdexcept>

#include "paraframe/errors.hpp"

namespace paraframe {

CurvatureData curvature(const ConnectionCoefficients& c, const FrameAlgebra& fa,
                        const MetricFrame& g) {
  const int n = c.dim();
  if (fa.dim() != n || g.dim() != n) throw std::invalid_argument("curvature: dimension mismatch");
  CurvatureData out{TensorField(n, {Slot::lower, Slot::lower, Slot::lower, Slot::upper}),
                    TensorField(n, {Slot::lower, Slot::lower, Slot::lower, Slot::lower})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          ExactScalar v;
          for (int m = 0; m < n; ++m) {
            v += c.gamma(j, k, m) * c.gamma(i, m, l);
            v -= c.gamma(i, k, m) * c.gamma(j, m, l);
            v -= fa.c(i, j, m) * c.gamma(m, k, l);
          }
          out.riemann.at({i, j, k, l}) = std::move(v);
        }
  out.lowered = out.riemann.with_slot_lowered(3, g);
  return out;
}

ParaSasakiResult is_para_sasaki_like(const ApapRStructure& s, const ConnectionCoefficients& lc) {
  if (lc.kind() != ConnectionKind::levi_civita)
    throw std::invalid_argument("para-Sasaki test requires the Levi-Civita connection");
  const int n = s.dim();
  const StructureDerivatives d = covariant_derivative_structure(lc, s);
  ParaSasakiResult out;
  out.residual = TensorField(n, {Slot::lower, Slot::lower, Slot::upper});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        ExactScalar rhs = -(s.metric().at(i, j) * s.xi()[m]);
        if (m == i) rhs -= s.eta()[j];
        rhs += 2 * (s.eta()[i] * s.eta()[j] * s.xi()[m]);
        out.residual.at({i, j, m}) = d.dphi.at({i, j, m}) - rhs;
      }
  out.flag = out.residual.is_zero();
  return out;
}

namespace {

void require_para_sasaki(const FrameAlgebra& fa, const ApapRStructure& s, const char* who) {
  const ConnectionCoefficients lc = levi_civita(fa, s.metric());
  if (!is_para_sasaki_like(s, lc).flag)
    throw ValidationError(std::string(who) + ": base structure is not para-Sasaki-like; "
                          "the closed form is only valid under that hypothesis");
}

}  // namespace

CurvatureData gsm_curvature_closed_form(const CurvatureData& lc_curvature, const FrameAlgebra& fa,
                                        const ApapRStructure& s, const ExactScalar& alpha,
                                        const ExactScalar& beta) {
  const int n = s.dim();
  if (lc_curvature.riemann.dim() != n) throw std::invalid_argument("curvature/structure dimension mismatch");
  require_para_sasaki(fa, s, "gsm_curvature_closed_form");

  // g(phi x, e_k) pairing; equals g(x, phi e_k) on valid structures.
  const PolyMatrix phig = s.phi().transposed() * s.metric().components();
  const PolyMatrix& g = s.metric().components();
  const PolyMatrix& phi = s.phi();
  const auto eta = s.eta();
  const auto xi = s.xi();

  const ExactScalar a_ab = alpha - alpha * beta;          // alpha - alpha beta
  const ExactScalar b2b = 2 * beta - beta * beta;         // 2 beta - beta^2
  const ExactScalar a2b = alpha * alpha + beta;           // alpha^2 + beta
  const ExactScalar ab = alpha * beta;                    // alpha beta
  const ExactScalar a2 = alpha * alpha;                   // alpha^2
  const ExactScalar b2m2b = beta * beta - 2 * beta;       // beta^2 - 2 beta
  const ExactScalar abma = alpha * beta - alpha;          // alpha beta - alpha

  CurvatureData out{TensorField(n, {Slot::lower, Slot::lower, Slot::lower, Slot::upper}),
                    TensorField(n, {Slot::lower, Slot::lower, Slot::lower, Slot::lower})};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          ExactScalar v = lc_curvature.riemann.at({i, j, k, m});
          v += a_ab * g.at(j, k) * phi.at(m, i);
          v += b2b * phig.at(j, k) * phi.at(m, i);
          v += a2b * g.at(j, k) * eta[i] * xi[m];
          v += ab * phig.at(j, k) * eta[i] * xi[m];
          if (m == i) {
            v -= a2 * g.at(j, k);
            v += a2b * eta[j] * eta[k];
            v += a_ab * phig.at(j, k);
          }
          v += ab * eta[j] * eta[k] * phi.at(m, i);
          v += b2m2b * phig.at(i, k) * phi.at(m, j);
          v -= a2b * eta[j] * g.at(i, k) * xi[m];
          v -= ab * phig.at(i, k) * eta[j] * xi[m];
          if (m == j) {
            v += a2 * g.at(i, k);
            v -= a2b * eta[i] * eta[k];
            v += abma * phig.at(i, k);
          }
          v += abma * g.at(i, k) * phi.at(m, j);
          v -= ab * eta[i] * eta[k] * phi.at(m, j);
          out.riemann.at({i, j, k, m}) = std::move(v);
        }
  out.lowered = out.riemann.with_slot_lowered(3, s.metric());
  return out;
}

TensorField ricci(const CurvatureData& curv, const MetricFrame& g) {
  const int n = curv.lowered.dim();
  if (g.dim() != n) throw std::invalid_argument("ricci: dimension mismatch");
  TensorField ric(n, {Slot::lower, Slot::lower});
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      ExactScalar v;
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          const ExactScalar& w = g.inv(i, l);
          if (!w.is_zero()) v += w * curv.lowered.at({i, j, k, l});
        }
      ric.at({j, k}) = std::move(v);
    }
  return ric;
}

TensorField gsm_ricci_closed_form(const TensorField& ricci_lc, const FrameAlgebra& fa,
                                  const ApapRStructure& s, const ExactScalar& alpha,
                                  const ExactScalar& beta) {
  const int N = s.dim();
  if (ricci_lc.dim() != N || ricci_lc.rank() != 2)
    throw std::invalid_argument("gsm_ricci_closed_form: Ricci tensor has wrong shape");
  require_para_sasaki(fa, s, "gsm_ricci_closed_form");
  const int n = (N - 1) / 2;

  const ExactScalar c_g = beta * beta - beta + (1 - 2 * n) * (alpha * alpha);
  const ExactScalar c_ee = (2 * n + 1) * beta - beta * beta + (2 * n - 1) * (alpha * alpha);
  const ExactScalar c_gp = (alpha * beta - alpha) * ExactScalar(2 - 2 * n) + alpha;

  TensorField out(N, {Slot::lower, Slot::lower});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      out.at({i, j}) = ricci_lc.at({i, j}) + c_g * s.metric().at(i, j) +
                       c_ee * (s.eta()[i] * s.eta()[j]) + c_gp * s.g_phi().at(i, j);
  return out;
}

ExactScalar scalar_curvature(const TensorField& ric, const MetricFrame& g) {
  const int n = ric.dim();
  if (g.dim() != n || ric.rank() != 2) throw std::invalid_argument("scalar_curvature: shape mismatch");
  ExactScalar out;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const ExactScalar& w = g.inv(j, k);
      if (!w.is_zero()) out += w * ric.at({j, k});
    }
  return out;
}

}  // namespace paraframe
