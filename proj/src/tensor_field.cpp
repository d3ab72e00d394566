#include "paraframe/tensor_field.hpp"

#include <stdexcept>

namespace paraframe {

namespace {

size_t pow_size(int dim, int rank) {
  size_t s = 1;
  for (int i = 0; i < rank; ++i) s *= static_cast<size_t>(dim);
  return s;
}

}  // namespace

TensorField::TensorField(int dim, std::vector<Slot> signature)
    : signature_(std::move(signature)), dim_(dim), data_(pow_size(dim, static_cast<int>(signature_.size()))) {
  if (dim <= 0) throw std::invalid_argument("tensor dimension must be positive");
}

ExactScalar& TensorField::at(std::span<const int> idx) {
  return const_cast<ExactScalar&>(static_cast<const TensorField*>(this)->at(idx));
}

const ExactScalar& TensorField::at(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank()) throw std::invalid_argument("tensor index rank mismatch");
  size_t flat = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw std::out_of_range("tensor index out of range");
    flat = flat * static_cast<size_t>(dim_) + static_cast<size_t>(v);
  }
  return data_[flat];
}

bool TensorField::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

TensorField TensorField::operator+(const TensorField& rhs) const {
  if (signature_ != rhs.signature_ || dim_ != rhs.dim_)
    throw std::invalid_argument("tensor sum signature mismatch");
  TensorField out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

TensorField TensorField::operator-(const TensorField& rhs) const {
  if (signature_ != rhs.signature_ || dim_ != rhs.dim_)
    throw std::invalid_argument("tensor difference signature mismatch");
  TensorField out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

TensorField TensorField::scaled(const ExactScalar& c) const {
  TensorField out = *this;
  for (auto& v : out.data_) v = v * c;
  return out;
}

TensorField TensorField::contracted_with(int slot, const PolyMatrix& weights, Slot new_kind) const {
  if (slot < 0 || slot >= rank()) throw std::invalid_argument("tensor slot out of range");
  TensorField out(dim_, signature_);
  out.signature_[slot] = new_kind;
  const int r = rank();
  std::vector<int> idx(r, 0), src(r, 0);
  const size_t total = data_.size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int s = r - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rem % dim_);
      rem /= dim_;
    }
    ExactScalar acc;
    src = idx;
    for (int m = 0; m < dim_; ++m) {
      src[slot] = m;
      const ExactScalar& w = weights.at(m, idx[slot]);
      if (!w.is_zero()) acc += at(std::span<const int>(src)) * w;
    }
    out.data_[flat] = std::move(acc);
  }
  return out;
}

TensorField TensorField::with_slot_lowered(int slot, const MetricFrame& g) const {
  if (signature_[slot] != Slot::upper) throw std::invalid_argument("slot is already covariant");
  return contracted_with(slot, g.components(), Slot::lower);
}

TensorField TensorField::with_slot_raised(int slot, const MetricFrame& g) const {
  if (signature_[slot] != Slot::lower) throw std::invalid_argument("slot is already contravariant");
  return contracted_with(slot, g.inverse(), Slot::upper);
}

}  // namespace paraframe
