#include "paraframe/connection.hpp"

#include <sstream>
#include <stdexcept>

#include "paraframe/errors.hpp"

namespace paraframe {

namespace {

std::string connection_table(const ConnectionCoefficients& c) {
  std::ostringstream out;
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k)
        if (!c.gamma(i, j, k).is_zero())
          out << "Gamma[" << i << "][" << j << "]^" << k << " = " << c.gamma(i, j, k).str() << "\n";
  return out.str();
}

std::string metricity_table(const ConnectionCoefficients& c, const MetricFrame& g) {
  std::ostringstream out;
  const int n = c.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ExactScalar v;
        for (int m = 0; m < n; ++m) v -= c.gamma(i, j, m) * g.at(m, k) + c.gamma(i, k, m) * g.at(j, m);
        if (!v.is_zero()) out << "(Dg)[" << i << "][" << j << "][" << k << "] = " << v.str() << "\n";
      }
  return out.str();
}

bool is_metric_compatible(const ConnectionCoefficients& c, const MetricFrame& g) {
  const int n = c.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ExactScalar v;
        for (int m = 0; m < n; ++m) v += c.gamma(i, j, m) * g.at(m, k) + c.gamma(i, k, m) * g.at(j, m);
        if (!v.is_zero()) return false;
      }
  return true;
}

}  // namespace

ConnectionCoefficients::ConnectionCoefficients(int dim, ConnectionKind kind)
    : dim_(dim), kind_(kind), gamma_(static_cast<size_t>(dim) * dim * dim) {
  if (dim <= 0) throw std::invalid_argument("connection dimension must be positive");
}

void ConnectionCoefficients::set_gsm_parameters(ExactScalar alpha, ExactScalar beta) {
  alpha_ = std::move(alpha);
  beta_ = std::move(beta);
}

std::vector<ExactScalar> ConnectionCoefficients::derivative(std::span<const ExactScalar> x,
                                                            std::span<const ExactScalar> y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("derivative argument dimension mismatch");
  std::vector<ExactScalar> out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const ExactScalar xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k)
        if (!gamma(i, j, k).is_zero()) out[k] += xy * gamma(i, j, k);
    }
  }
  return out;
}

bool ConnectionCoefficients::same_coefficients(const ConnectionCoefficients& other) const {
  return dim_ == other.dim_ && gamma_ == other.gamma_;
}

ConnectionCoefficients levi_civita(const FrameAlgebra& fa, const MetricFrame& g) {
  const int n = fa.dim();
  if (g.dim() != n) throw std::invalid_argument("levi_civita: dimension mismatch");
  ConnectionCoefficients conn(n, ConnectionKind::levi_civita);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // w_k = g(D_{e_i} e_j, e_k)
      std::vector<ExactScalar> w(n);
      for (int k = 0; k < n; ++k) {
        ExactScalar t;
        for (int m = 0; m < n; ++m) {
          t += fa.c(i, j, m) * g.at(m, k);
          t -= fa.c(j, k, m) * g.at(m, i);
          t += fa.c(k, i, m) * g.at(m, j);
        }
        w[k] = ExactScalar(Rational(1, 2)) * t;
      }
      for (int m = 0; m < n; ++m) {
        ExactScalar v;
        for (int k = 0; k < n; ++k) v += g.inv(m, k) * w[k];
        conn.gamma(i, j, m) = std::move(v);
      }
    }

  // Verified before return: both defining identities must hold exactly.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const ExactScalar t = conn.gamma(i, j, k) - conn.gamma(j, i, k) - fa.c(i, j, k);
        if (!t.is_zero())
          throw InternalConsistencyError("Levi-Civita connection is not torsion-free", "T = 0",
                                         connection_table(conn));
      }
  if (!is_metric_compatible(conn, g))
    throw InternalConsistencyError("Levi-Civita connection is not metric", "Dg = 0",
                                   metricity_table(conn, g));
  return conn;
}

ConnectionCoefficients gsm_connection(const ConnectionCoefficients& lc, const ApapRStructure& s,
                                      const ExactScalar& alpha, const ExactScalar& beta) {
  if (lc.kind() != ConnectionKind::levi_civita)
    throw std::invalid_argument("gsm_connection requires the Levi-Civita connection as base");
  const int n = lc.dim();
  if (s.dim() != n) throw std::invalid_argument("gsm_connection: dimension mismatch");
  ConnectionCoefficients conn(n, ConnectionKind::gsm);
  conn.set_gsm_parameters(alpha, beta);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ExactScalar v = lc.gamma(i, j, k);
        v += alpha * (s.metric().at(i, j) * s.xi()[k]);
        if (k == i) v -= alpha * s.eta()[j];
        v += beta * (s.g_phi().at(i, j) * s.xi()[k]);
        v -= beta * (s.eta()[j] * s.phi().at(k, i));
        conn.gamma(i, j, k) = std::move(v);
      }
  if (!is_metric_compatible(conn, s.metric()))
    throw InternalConsistencyError(
        "generalized symmetric connection failed the metricity check (invalid input structure)",
        "Dbar g = 0", metricity_table(conn, s.metric()));
  return conn;
}

TensorField torsion(const ConnectionCoefficients& c, const FrameAlgebra& fa) {
  const int n = c.dim();
  if (fa.dim() != n) throw std::invalid_argument("torsion: dimension mismatch");
  TensorField T(n, {Slot::lower, Slot::lower, Slot::upper});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        T.at({i, j, k}) = c.gamma(i, j, k) - c.gamma(j, i, k) - fa.c(i, j, k);
  return T;
}

ConnectionCoefficients reconstruct_connection_from_torsion(const TensorField& T,
                                                           const ConnectionCoefficients& lc,
                                                           const MetricFrame& g) {
  const int n = lc.dim();
  if (T.dim() != n || T.rank() != 3) throw std::invalid_argument("torsion tensor has wrong shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const ExactScalar v = T.at({i, j, k}) + T.at({j, i, k});
        if (!v.is_zero())
          throw ValidationError("torsion tensor is not antisymmetric in its covariant slots");
      }

  // Lowered torsion T_ijk = g(T(e_i,e_j), e_k).
  const TensorField Tlow = T.with_slot_lowered(2, g);
  ConnectionCoefficients conn(n, ConnectionKind::custom);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        ExactScalar h;
        for (int z = 0; z < n; ++z) {
          const ExactScalar s = Tlow.at({i, j, z}) + Tlow.at({z, i, j}) + Tlow.at({z, j, i});
          if (!s.is_zero()) h += g.inv(m, z) * s;
        }
        conn.gamma(i, j, m) = lc.gamma(i, j, m) + ExactScalar(Rational(1, 2)) * h;
      }
    }
  return conn;
}

StructureDerivatives covariant_derivative_structure(const ConnectionCoefficients& c,
                                                    const ApapRStructure& s) {
  const int n = c.dim();
  if (s.dim() != n) throw std::invalid_argument("covariant_derivative_structure: dimension mismatch");
  StructureDerivatives out{
      TensorField(n, {Slot::lower, Slot::lower, Slot::upper}),
      TensorField(n, {Slot::lower, Slot::upper}),
      TensorField(n, {Slot::lower, Slot::lower}),
      TensorField(n, {Slot::lower, Slot::lower, Slot::lower}),
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (D_{e_i} phi) e_j = D_{e_i}(phi e_j) - phi(D_{e_i} e_j)
      for (int m = 0; m < n; ++m) {
        ExactScalar v;
        for (int sdx = 0; sdx < n; ++sdx) {
          v += s.phi().at(sdx, j) * c.gamma(i, sdx, m);
          v -= c.gamma(i, j, sdx) * s.phi().at(m, sdx);
        }
        out.dphi.at({i, j, m}) = std::move(v);
      }
      // (D_{e_i} eta)(e_j) = -eta(D_{e_i} e_j)
      {
        ExactScalar v;
        for (int m = 0; m < n; ++m) v -= c.gamma(i, j, m) * s.eta()[m];
        out.deta.at({i, j}) = std::move(v);
      }
      // (D_{e_i} g)(e_j, e_k)
      for (int k = 0; k < n; ++k) {
        ExactScalar v;
        for (int m = 0; m < n; ++m)
          v -= c.gamma(i, j, m) * s.metric().at(m, k) + c.gamma(i, k, m) * s.metric().at(j, m);
        out.dg.at({i, j, k}) = std::move(v);
      }
    }
    // D_{e_i} xi
    for (int m = 0; m < n; ++m) {
      ExactScalar v;
      for (int sdx = 0; sdx < n; ++sdx) v += c.gamma(i, sdx, m) * s.xi()[sdx];
      out.dxi.at({i, m}) = std::move(v);
    }
  }
  return out;
}

}  // namespace paraframe
