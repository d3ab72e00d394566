#include "paraframe/classify.hpp"

#include <sstream>
#include <stdexcept>

#include "paraframe/errors.hpp"

namespace paraframe {

const char* to_string(EinsteinKind k) {
  switch (k) {
    case EinsteinKind::einstein: return "einstein";
    case EinsteinKind::eta_einstein: return "eta-einstein";
    case EinsteinKind::para_einstein_like: return "para-einstein-like";
    case EinsteinKind::none: return "none";
  }
  return "?";
}

const char* to_string(SolitonKind k) {
  switch (k) {
    case SolitonKind::ricci: return "ricci";
    case SolitonKind::eta_ricci: return "eta-ricci";
    case SolitonKind::para_ricci_like: return "para-ricci-like";
    case SolitonKind::none: return "none";
  }
  return "?";
}

bool is_para_einstein_like(const EinsteinTriple& t) { return t.status == SolveStatus::unique_solution; }
bool is_eta_einstein(const EinsteinTriple& t) { return is_para_einstein_like(t) && t.b.is_zero(); }
bool is_einstein(const EinsteinTriple& t) { return is_eta_einstein(t) && t.c.is_zero(); }
bool is_para_ricci_like_soliton(const SolitonTriple& t) { return t.status == SolveStatus::unique_solution; }
bool is_eta_ricci_soliton(const SolitonTriple& t) { return is_para_ricci_like_soliton(t) && t.mu.is_zero(); }
bool is_ricci_soliton(const SolitonTriple& t) { return is_eta_ricci_soliton(t) && t.nu.is_zero(); }

TensorField lie_derivative_metric(std::span<const ExactScalar> v, const ConnectionCoefficients& conn,
                                  const MetricFrame& g) {
  const int n = conn.dim();
  if (static_cast<int>(v.size()) != n || g.dim() != n)
    throw std::invalid_argument("lie_derivative_metric: dimension mismatch");
  TensorField out(n, {Slot::lower, Slot::lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactScalar t;
      for (int s = 0; s < n; ++s) {
        if (v[s].is_zero()) continue;
        for (int m = 0; m < n; ++m) {
          t += v[s] * conn.gamma(i, s, m) * g.at(m, j);
          t += v[s] * conn.gamma(j, s, m) * g.at(m, i);
        }
      }
      out.at({i, j}) = std::move(t);
    }
  return out;
}

std::vector<ExactScalar> Potential::components(const ApapRStructure& s) const {
  std::vector<ExactScalar> v(s.xi().begin(), s.xi().end());
  if (shape == Shape::collinear)
    for (auto& c : v) c = c * k;
  return v;
}

std::string Potential::describe() const {
  if (shape == Shape::reeb) return "xi";
  return "(" + k.str() + ")*xi";
}

TensorField gsm_lie_derivative(const Potential& v, const ConnectionCoefficients& gsm,
                               const ConnectionCoefficients& lc, const ApapRStructure& s,
                               const ExactScalar& alpha, const ExactScalar& beta) {
  if (gsm.kind() != ConnectionKind::gsm)
    throw std::invalid_argument("gsm_lie_derivative requires a gsm-tagged connection");
  const int n = s.dim();
  const std::vector<ExactScalar> comps = v.components(s);
  const TensorField direct = lie_derivative_metric(comps, gsm, s.metric());

  // Closed form against which the direct evaluation is verified.
  const TensorField base = lie_derivative_metric(comps, lc, s.metric());
  TensorField cf(n, {Slot::lower, Slot::lower});
  const PolyMatrix gphiphi = s.phi().transposed() * s.metric().components() * s.phi();
  const ExactScalar kk = v.shape == Potential::Shape::collinear ? v.k : ExactScalar(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (v.shape == Potential::Shape::reeb) {
        cf.at({i, j}) = base.at({i, j}) - 2 * alpha * gphiphi.at(i, j) - 2 * beta * s.g_phi().at(i, j);
      } else {
        cf.at({i, j}) = base.at({i, j}) + 2 * (alpha * kk) * (s.eta()[i] * s.eta()[j]) -
                        2 * (alpha * kk) * s.metric().at(i, j) - 2 * (beta * kk) * s.g_phi().at(i, j);
      }
    }
  if (!(direct == cf)) {
    std::ostringstream a, b;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!cf.at({i, j}).is_zero()) a << "(" << i << "," << j << ") = " << cf.at({i, j}).str() << "\n";
        if (!direct.at({i, j}).is_zero())
          b << "(" << i << "," << j << ") = " << direct.at({i, j}).str() << "\n";
      }
    throw InternalConsistencyError("transferred Lie derivative disagrees with its closed form",
                                   a.str(), b.str());
  }
  return direct;
}

namespace {

/// Rows of the shared (a,b,c)-style system: coeff * (u1,u2,u3) = rhs for every
/// component pair (i,j).
LinearSystem decomposition_system(const TensorField& rhs_tensor, const ApapRStructure& s,
                                  std::vector<std::string> unknowns) {
  const int n = s.dim();
  const AssociatedMetric assoc = associated_metric(s);
  LinearSystem sys;
  sys.unknowns = std::move(unknowns);
  sys.coefficients = PolyMatrix(n * n, 3);
  sys.rhs.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int row = i * n + j;
      sys.coefficients.at(row, 0) = s.metric().at(i, j);
      sys.coefficients.at(row, 1) = assoc.components.at(i, j);
      sys.coefficients.at(row, 2) = s.eta()[i] * s.eta()[j];
      sys.rhs[row] = rhs_tensor.at({i, j});
    }
  return sys;
}

}  // namespace

EinsteinTriple solve_einstein_like(const TensorField& ric, const ApapRStructure& s) {
  if (ric.dim() != s.dim() || ric.rank() != 2)
    throw std::invalid_argument("solve_einstein_like: Ricci tensor has wrong shape");
  const SolveResult r = solve_exact(decomposition_system(ric, s, {"a", "b", "c"}));
  EinsteinTriple t;
  t.status = r.status;
  t.free_unknowns = r.free_unknowns;
  if (r.status != SolveStatus::unique_solution) {
    t.kind = EinsteinKind::none;
    return t;
  }
  t.a = r.solution[0];
  t.b = r.solution[1];
  t.c = r.solution[2];
  t.kind = t.b.is_zero() ? (t.c.is_zero() ? EinsteinKind::einstein : EinsteinKind::eta_einstein)
                         : EinsteinKind::para_einstein_like;
  return t;
}

SolitonTriple solve_soliton(const TensorField& lie_vg, const TensorField& ric,
                            const ApapRStructure& s, std::string potential_label) {
  if (lie_vg.dim() != s.dim() || ric.dim() != s.dim())
    throw std::invalid_argument("solve_soliton: tensor shape mismatch");
  // lambda g + mu g~ + nu eta(x)eta = -(1/2 L_v g + Ric)
  TensorField rhs(s.dim(), {Slot::lower, Slot::lower});
  const ExactScalar half(Rational(1, 2));
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      rhs.at({i, j}) = -(half * lie_vg.at({i, j}) + ric.at({i, j}));
  const SolveResult r = solve_exact(decomposition_system(rhs, s, {"lambda", "mu", "nu"}));
  SolitonTriple t;
  t.potential = std::move(potential_label);
  t.status = r.status;
  t.free_unknowns = r.free_unknowns;
  if (r.status != SolveStatus::unique_solution) {
    t.kind = SolitonKind::none;
    return t;
  }
  t.lambda = r.solution[0];
  t.mu = r.solution[1];
  t.nu = r.solution[2];
  t.kind = t.mu.is_zero() ? (t.nu.is_zero() ? SolitonKind::ricci : SolitonKind::eta_ricci)
                          : SolitonKind::para_ricci_like;
  return t;
}

EinsteinTriple einstein_transfer_constants(const ExactScalar& a, const ExactScalar& b,
                                           const ExactScalar& c, int n, const ExactScalar& alpha,
                                           const ExactScalar& beta) {
  if (n < 1) throw std::invalid_argument("transfer constants need n >= 1");
  EinsteinTriple t;
  t.status = SolveStatus::unique_solution;
  t.a = beta * beta - beta + (1 - 2 * n) * (alpha * alpha) + a;
  t.b = ExactScalar(2 - 2 * n) * (alpha * beta - alpha) + alpha + b;
  t.c = (2 * n - 1) * (alpha * alpha) + (2 * n - 2) * (alpha * beta) + (1 - 2 * n) * alpha +
        (2 * n + 1) * beta - beta * beta + c;
  t.kind = t.b.is_zero() ? (t.c.is_zero() ? EinsteinKind::einstein : EinsteinKind::eta_einstein)
                         : EinsteinKind::para_einstein_like;
  return t;
}

SolitonTriple soliton_transfer_constants(const ExactScalar& a, const ExactScalar& b,
                                         const ExactScalar& c, int n, const ExactScalar& alpha,
                                         const ExactScalar& beta) {
  if (n < 1) throw std::invalid_argument("transfer constants need n >= 1");
  SolitonTriple t;
  t.potential = "xi";
  t.status = SolveStatus::unique_solution;
  t.lambda = (2 * n - 1) * (alpha * alpha) - beta * beta + alpha + beta + a;
  t.mu = 2 * (n - 1) * (alpha * beta) + (1 - 2 * n) * alpha + beta + b;
  t.nu = beta * beta + (1 - 2 * n) * (alpha * alpha) + (alpha - alpha * beta) * ExactScalar(2 * n - 2) -
         (2 * n + 2) * beta + c;
  t.kind = t.mu.is_zero() ? (t.nu.is_zero() ? SolitonKind::ricci : SolitonKind::eta_ricci)
                          : SolitonKind::para_ricci_like;
  return t;
}

SolitonTriple collinear_soliton_transfer_constants(const ExactScalar& a, const ExactScalar& b,
                                                   const ExactScalar& c, const ExactScalar& k,
                                                   int n, const ExactScalar& alpha,
                                                   const ExactScalar& beta) {
  if (n < 1) throw std::invalid_argument("transfer constants need n >= 1");
  SolitonTriple t;
  t.potential = "(" + k.str() + ")*xi";
  t.status = SolveStatus::unique_solution;
  t.lambda = a + alpha * b - beta * beta + beta + (2 * n - 1) * (alpha * alpha);
  t.mu = b + beta * b + (alpha - alpha * beta) * ExactScalar(2 * n - 2);
  t.nu = alpha * b - (2 * n + 1) * beta + beta * beta + (1 - 2 * n) * (alpha * alpha) + c -
         beta * b + (alpha * beta - alpha) * ExactScalar(2 * n - 2);
  t.kind = t.mu.is_zero() ? (t.nu.is_zero() ? SolitonKind::ricci : SolitonKind::eta_ricci)
                          : SolitonKind::para_ricci_like;
  return t;
}

}  // namespace paraframe
