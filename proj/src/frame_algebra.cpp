#include "paraframe/frame_algebra.hpp"

#include <stdexcept>

namespace paraframe {

FrameAlgebra::FrameAlgebra(std::vector<std::string> frame_names) : names_(std::move(frame_names)) {
  if (names_.empty()) throw std::invalid_argument("frame must have at least one vector");
  c_.resize(names_.size() * names_.size() * names_.size());
}

void FrameAlgebra::set_bracket(int i, int j, std::vector<ExactScalar> components) {
  const int n = dim();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("bracket index out of range");
  if (i == j) throw std::invalid_argument("bracket of a frame vector with itself is zero");
  if (static_cast<int>(components.size()) != n)
    throw std::invalid_argument("bracket component count mismatch");
  for (int k = 0; k < n; ++k) {
    c_[(static_cast<size_t>(i) * n + j) * n + k] = components[k];
    c_[(static_cast<size_t>(j) * n + i) * n + k] = -components[k];
  }
}

std::vector<ExactScalar> FrameAlgebra::bracket(std::span<const ExactScalar> x,
                                               std::span<const ExactScalar> y) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("bracket argument dimension mismatch");
  std::vector<ExactScalar> out(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const ExactScalar xy = x[i] * y[j];
      for (int k = 0; k < n; ++k) {
        const ExactScalar& ck = c(i, j, k);
        if (!ck.is_zero()) out[k] += xy * ck;
      }
    }
  }
  return out;
}

std::optional<FrameAlgebra::JacobiViolation> FrameAlgebra::first_jacobi_violation() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          ExactScalar s;
          for (int m = 0; m < n; ++m) {
            s += c(j, k, m) * c(i, m, l);
            s += c(k, i, m) * c(j, m, l);
            s += c(i, j, m) * c(k, m, l);
          }
          if (!s.is_zero()) return JacobiViolation{i, j, k, l, s};
        }
  return std::nullopt;
}

}  // namespace paraframe
