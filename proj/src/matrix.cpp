#include "paraframe/matrix.hpp"

#include <stdexcept>

namespace paraframe {

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1);
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  PolyMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
  PolyMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

ExactScalar PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return ExactScalar(1);
  PolyMatrix m = *this;
  ExactScalar prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m.at(r, k).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return ExactScalar(0);
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        ExactScalar num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        auto q = num.exact_quotient(prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, k) = ExactScalar(0);
    }
    prev = m.at(k, k);
  }
  ExactScalar det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

std::optional<PolyMatrix> PolyMatrix::polynomial_inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  const ExactScalar det = determinant();
  if (det.is_zero()) return std::nullopt;
  PolyMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = at(r, c);
          ++cc;
        }
        ++rr;
      }
      ExactScalar cof = minor.determinant();
      if ((i + j) % 2 != 0) cof = -cof;
      auto q = cof.exact_quotient(det);
      if (!q) return std::nullopt;
      inv.at(j, i) = std::move(*q);  // adjugate transposes the cofactors
    }
  }
  return inv;
}

}  // namespace paraframe
