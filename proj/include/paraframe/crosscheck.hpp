#pragma once

#include <optional>
#include <string>

#include "paraframe/classify.hpp"
#include "paraframe/jets.hpp"
#include "paraframe/manifold_spec.hpp"
#include "paraframe/report.hpp"

namespace paraframe {

/// Outcome of the full identity suite on one manifold.
///
/// validation_failure flags failed input axioms (the input's fault);
/// internal_failure flags identities that must hold on every valid input
/// (closed form vs direct computation); reference_mismatch flags
/// reference-vs-computed disagreements against the published tables, which
/// are reported side by side and are an expected outcome where the source
/// tables are known to be misprinted.
struct CrosscheckOutcome {
  Report report;
  bool validation_failure = false;
  bool internal_failure = false;
  bool reference_mismatch = false;
};

/// Runs every identity at the symbolic (alpha, beta) level on the loaded
/// manifold. When builtin_name names a pristine built-in fixture, the
/// published component tables are adjudicated against the computed ones.
CrosscheckOutcome run_crosscheck(const LoadedManifold& m,
                                 const std::optional<std::string>& builtin_name);

}  // namespace paraframe
