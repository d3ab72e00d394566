#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "paraframe/metric.hpp"

namespace paraframe {

enum class Slot : std::uint8_t { upper, lower };

/// Dense constant tensor in the frame: a valence signature plus one ExactScalar
/// per multi-index, stored row-major in slot order.
class TensorField {
 public:
  TensorField() : dim_(0) {}
  TensorField(int dim, std::vector<Slot> signature);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(signature_.size()); }
  const std::vector<Slot>& signature() const { return signature_; }

  ExactScalar& at(std::span<const int> idx);
  const ExactScalar& at(std::span<const int> idx) const;
  ExactScalar& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
  const ExactScalar& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  bool is_zero() const;
  TensorField operator+(const TensorField& rhs) const;
  TensorField operator-(const TensorField& rhs) const;
  TensorField scaled(const ExactScalar& c) const;
  bool operator==(const TensorField& rhs) const = default;

  /// Contract the given slot with g (lower) or its exact inverse (raise).
  TensorField with_slot_lowered(int slot, const MetricFrame& g) const;
  TensorField with_slot_raised(int slot, const MetricFrame& g) const;

  const std::vector<ExactScalar>& data() const { return data_; }
  std::vector<ExactScalar>& data() { return data_; }

 private:
  TensorField contracted_with(int slot, const PolyMatrix& weights, Slot new_kind) const;

  std::vector<Slot> signature_;
  int dim_;
  std::vector<ExactScalar> data_;
};

}  // namespace paraframe
