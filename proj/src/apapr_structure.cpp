#include "paraframe/apapr_structure.hpp"

#include <sstream>
#include <stdexcept>

#include "paraframe/errors.hpp"

namespace paraframe {

ApapRStructure::ApapRStructure(MetricFrame g, PolyMatrix phi, std::vector<ExactScalar> xi,
                               std::optional<std::vector<ExactScalar>> eta_override)
    : g_(std::move(g)), phi_(std::move(phi)), xi_(std::move(xi)) {
  const int n = g_.dim();
  if (phi_.rows() != n || phi_.cols() != n || static_cast<int>(xi_.size()) != n)
    throw std::invalid_argument("apapR structure dimension mismatch");
  if (eta_override) {
    if (static_cast<int>(eta_override->size()) != n)
      throw std::invalid_argument("eta override dimension mismatch");
    eta_ = std::move(*eta_override);
  } else {
    eta_.resize(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) eta_[i] += g_.at(i, j) * xi_[j];
  }
  gphi_ = g_.components() * phi_;
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

std::string component_detail(int i, const ExactScalar& residual) {
  std::ostringstream out;
  out << "component " << i << ": residual " << residual.str();
  return out.str();
}

std::string component_detail(int i, int j, const ExactScalar& residual) {
  std::ostringstream out;
  out << "component (" << i << "," << j << "): residual " << residual.str();
  return out.str();
}

}  // namespace

ValidationReport validate_apapr(const FrameAlgebra& fa, const ApapRStructure& s) {
  const int n = s.dim();
  if (fa.dim() != n) throw std::invalid_argument("frame algebra and structure dimensions differ");
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string detail = "") {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  // eta(xi) = 1
  {
    ExactScalar v;
    for (int i = 0; i < n; ++i) v += s.eta()[i] * s.xi()[i];
    v -= ExactScalar(1);
    add("eta(xi) = 1", v.is_zero(), v.is_zero() ? "" : "residual " + v.str());
  }
  // phi xi = 0
  {
    bool ok = true;
    std::string detail;
    for (int k = 0; k < n && ok; ++k) {
      ExactScalar v;
      for (int j = 0; j < n; ++j) v += s.phi().at(k, j) * s.xi()[j];
      if (!v.is_zero()) {
        ok = false;
        detail = component_detail(k, v);
      }
    }
    add("phi(xi) = 0", ok, detail);
  }
  // phi^2 = Id - xi (x) eta
  {
    bool ok = true;
    std::string detail;
    const PolyMatrix phi2 = s.phi() * s.phi();
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        ExactScalar v = phi2.at(i, j) + s.xi()[i] * s.eta()[j];
        if (i == j) v -= ExactScalar(1);
        if (!v.is_zero()) {
          ok = false;
          detail = component_detail(i, j, v);
          break;
        }
      }
    add("phi^2 = id - xi(x)eta", ok, detail);
  }
  // tr phi = 0
  {
    ExactScalar tr;
    for (int i = 0; i < n; ++i) tr += s.phi().at(i, i);
    add("trace(phi) = 0", tr.is_zero(), tr.is_zero() ? "" : "residual " + tr.str());
  }
  // g(phi x, phi y) = g(x,y) - eta(x)eta(y)
  {
    bool ok = true;
    std::string detail;
    const PolyMatrix lhs = s.phi().transposed() * s.metric().components() * s.phi();
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        const ExactScalar v = lhs.at(i, j) - s.metric().at(i, j) + s.eta()[i] * s.eta()[j];
        if (!v.is_zero()) {
          ok = false;
          detail = component_detail(i, j, v);
          break;
        }
      }
    add("g(phi.,phi.) = g - eta(x)eta", ok, detail);
  }
  // eta = g xi
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i) {
      ExactScalar v = -s.eta()[i];
      for (int j = 0; j < n; ++j) v += s.metric().at(i, j) * s.xi()[j];
      if (!v.is_zero()) {
        ok = false;
        detail = component_detail(i, v);
      }
    }
    add("eta = g(xi,.)", ok, detail);
  }
  // g(xi,xi) = 1
  {
    ExactScalar v;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v += s.metric().at(i, j) * s.xi()[i] * s.xi()[j];
    v -= ExactScalar(1);
    add("g(xi,xi) = 1", v.is_zero(), v.is_zero() ? "" : "residual " + v.str());
  }
  // g phi symmetric: g(phi x, y) = g(x, phi y)
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j) {
        const ExactScalar v = s.g_phi().at(i, j) - s.g_phi().at(j, i);
        if (!v.is_zero()) {
          ok = false;
          detail = component_detail(i, j, v);
          break;
        }
      }
    add("g(phi.,.) symmetric", ok, detail);
  }
  // base metric positive definite (checked only for rational entries)
  if (all_rational(s.metric().components())) {
    const Signature sig = rational_signature(s.metric().components());
    const bool ok = sig.positive == n;
    std::ostringstream detail;
    if (!ok)
      detail << "signature (" << sig.positive << "," << sig.negative << "," << sig.zero << ")";
    add("g positive definite", ok, detail.str());
  }
  return report;
}

AssociatedMetric associated_metric(const ApapRStructure& s) {
  const int n = s.dim();
  AssociatedMetric out;
  out.components = PolyMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.components.at(i, j) = s.g_phi().at(i, j) + s.eta()[i] * s.eta()[j];
  if (all_rational(out.components)) out.signature = rational_signature(out.components);
  return out;
}

}  // namespace paraframe
