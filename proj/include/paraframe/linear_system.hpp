#pragma once

#include <string>
#include <vector>

#include "paraframe/matrix.hpp"

namespace paraframe {

/// Rectangular (possibly over-determined) linear system over the polynomial
/// ring, solved exactly in its fraction field.
struct LinearSystem {
  PolyMatrix coefficients;            // m x n
  std::vector<ExactScalar> rhs;       // m
  std::vector<std::string> unknowns;  // n
};

enum class SolveStatus {
  unique_solution,
  inconsistent,     // a residual row is nonzero
  underdetermined,  // rank < number of unknowns
  nonpolynomial,    // the unique solution exists but lies outside the ring
};

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<ExactScalar> solution;       // populated on unique_solution
  std::vector<std::string> free_unknowns;  // populated on underdetermined
};

const char* to_string(SolveStatus s);

/// Exact Gaussian elimination over the fraction field; fractions are cleared
/// from the solution whenever the result is polynomial.
SolveResult solve_exact(const LinearSystem& system);

}  // namespace paraframe
