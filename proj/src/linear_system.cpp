#include "paraframe/linear_system.hpp"

#include <stdexcept>

namespace paraframe {

namespace {

/// Element of the fraction field of the polynomial ring. Kept lightly
/// normalized: zero is 0/1, exact cancellations are taken when they happen to
/// come out even, and the denominator's leading coefficient is scaled to 1.
struct PolyFraction {
  ExactScalar num;
  ExactScalar den{1};

  static PolyFraction of(ExactScalar n) { return {std::move(n), ExactScalar(1)}; }

  void normalize() {
    if (num.is_zero()) {
      den = ExactScalar(1);
      return;
    }
    if (auto q = num.exact_quotient(den)) {
      num = std::move(*q);
      den = ExactScalar(1);
      return;
    }
    const Rational lead = den.leading_term().second;
    if (lead != 1) {
      const ExactScalar scale(Rational(1) / lead);
      num = num * scale;
      den = den * scale;
    }
  }

  bool is_zero() const { return num.is_zero(); }

  PolyFraction operator-(const PolyFraction& r) const {
    PolyFraction out{num * r.den - r.num * den, den * r.den};
    out.normalize();
    return out;
  }

  PolyFraction operator*(const PolyFraction& r) const {
    PolyFraction out{num * r.num, den * r.den};
    out.normalize();
    return out;
  }

  PolyFraction operator/(const PolyFraction& r) const {
    if (r.is_zero()) throw std::logic_error("PolyFraction division by zero");
    PolyFraction out{num * r.den, den * r.num};
    out.normalize();
    return out;
  }
};

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::unique_solution: return "unique";
    case SolveStatus::inconsistent: return "inconsistent";
    case SolveStatus::underdetermined: return "underdetermined";
    case SolveStatus::nonpolynomial: return "nonpolynomial";
  }
  return "?";
}

SolveResult solve_exact(const LinearSystem& system) {
  const int m = system.coefficients.rows();
  const int n = system.coefficients.cols();
  if (static_cast<int>(system.rhs.size()) != m || static_cast<int>(system.unknowns.size()) != n)
    throw std::invalid_argument("solve_exact: shape mismatch");

  // Augmented matrix over the fraction field.
  std::vector<std::vector<PolyFraction>> a(m, std::vector<PolyFraction>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = PolyFraction::of(system.coefficients.at(i, j));
    a[i][n] = PolyFraction::of(system.rhs[i]);
  }

  std::vector<int> pivot_row_of_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const PolyFraction factor = a[r][col] / a[rank][col];
      for (int cc = col; cc <= n; ++cc) a[r][cc] = a[r][cc] - factor * a[rank][cc];
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }

  SolveResult result;
  for (int r = rank; r < m; ++r) {
    if (!a[r][n].is_zero()) {
      result.status = SolveStatus::inconsistent;
      return result;
    }
  }
  if (rank < n) {
    result.status = SolveStatus::underdetermined;
    for (int col = 0; col < n; ++col)
      if (pivot_row_of_col[col] < 0) result.free_unknowns.push_back(system.unknowns[col]);
    return result;
  }

  result.solution.resize(n);
  for (int col = 0; col < n; ++col) {
    const int r = pivot_row_of_col[col];
    PolyFraction value = a[r][n] / a[r][col];
    value.normalize();
    auto cleared = value.num.exact_quotient(value.den);
    if (!cleared) {
      result.status = SolveStatus::nonpolynomial;
      result.solution.clear();
      return result;
    }
    result.solution[col] = std::move(*cleared);
  }
  result.status = SolveStatus::unique_solution;
  return result;
}

}  // namespace paraframe
