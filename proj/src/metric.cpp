#include "paraframe/metric.hpp"

#include <stdexcept>
#include <vector>

#include "paraframe/errors.hpp"

namespace paraframe {

MetricFrame::MetricFrame(PolyMatrix components) : g_(std::move(components)) {
  if (g_.rows() != g_.cols()) throw ValidationError("metric must be square");
  if (!g_.is_symmetric()) throw ValidationError("metric must be symmetric");
  det_ = g_.determinant();
  if (det_.is_zero()) throw ValidationError("metric is singular (zero determinant)");
  auto inv = g_.polynomial_inverse();
  if (!inv)
    throw ValidationError(
        "metric inverse has entries outside the polynomial ring; "
        "use a metric with rational or unimodular-polynomial inverse");
  ginv_ = std::move(*inv);
}

MetricFrame MetricFrame::identity(int n) { return MetricFrame(PolyMatrix::identity(n)); }

bool all_rational(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_rational()) return false;
  return true;
}

Signature rational_signature(const PolyMatrix& symmetric) {
  const int n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("signature of non-square matrix");
  if (!all_rational(symmetric)) throw std::invalid_argument("signature needs rational entries");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = symmetric.at(i, j).rational_value();

  auto add_row_col = [&](int dst, int src) {
    for (int j = 0; j < n; ++j) m[dst][j] += m[src][j];
    for (int i = 0; i < n; ++i) m[i][dst] += m[i][src];
  };
  auto swap_row_col = [&](int a, int b) {
    m[a].swap(m[b]);
    for (int i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
  };

  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int diag = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][r] != 0) {
          diag = r;
          break;
        }
      if (diag >= 0) {
        swap_row_col(k, diag);
      } else {
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (m[i][j] != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          sig.zero += n - k;
          return sig;
        }
        add_row_col(oi, oj);  // makes m[oi][oi] = 2*m[oi][oj] != 0
        if (oi != k) swap_row_col(k, oi);
      }
    }
    const Rational pivot = m[k][k];
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / pivot;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      for (int j = k; j < n; ++j) m[j][i] = m[i][j];
    }
  }
  return sig;
}

}  // namespace paraframe
