#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paraframe/frame_algebra.hpp"
#include "paraframe/metric.hpp"
#include "paraframe/tensor_field.hpp"

namespace paraframe {

/// Almost-paracontact almost-paracomplex Riemannian structure (phi, xi, eta, g)
/// in the frame. eta is derived from g and xi unless an override is supplied;
/// an override is kept as given and judged by validate_apapr.
class ApapRStructure {
 public:
  ApapRStructure(MetricFrame g, PolyMatrix phi, std::vector<ExactScalar> xi,
                 std::optional<std::vector<ExactScalar>> eta_override = std::nullopt);

  int dim() const { return g_.dim(); }
  const MetricFrame& metric() const { return g_; }
  /// phi^k_j at (k, j): phi(e_j) = sum_k phi^k_j e_k.
  const PolyMatrix& phi() const { return phi_; }
  std::span<const ExactScalar> xi() const { return xi_; }
  std::span<const ExactScalar> eta() const { return eta_; }
  /// Cached matrix of g(e_i, phi e_j).
  const PolyMatrix& g_phi() const { return gphi_; }

 private:
  MetricFrame g_;
  PolyMatrix phi_;
  std::vector<ExactScalar> xi_, eta_;
  PolyMatrix gphi_;
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // first offending component on failure
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
};

/// Checks every defining structure axiom and reports per-axiom verdicts with
/// the first offending component on failure. Throws on dimension mismatch.
ValidationReport validate_apapr(const FrameAlgebra& fa, const ApapRStructure& s);

/// Associated metric together with its exact signature, computed only when
/// every entry is a parameter-free rational.
struct AssociatedMetric {
  PolyMatrix components;  // g~(e_i, e_j) = g(e_i, phi e_j) + eta_i eta_j
  std::optional<Signature> signature;
};
AssociatedMetric associated_metric(const ApapRStructure& s);

}  // namespace paraframe
