#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "signsynth/errors.hpp"

namespace signsynth::nn {

// Dense row-major tensor of arbitrary rank. Images use NCHW inside the
// network code.
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape, T fill = T(0)) : shape_(std::move(shape)) {
    data_.assign(count(shape_), fill);
  }

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape), T(0)); }
  static Tensor ones(std::vector<int> shape) { return Tensor(std::move(shape), T(1)); }
  static Tensor scalar(T v) {
    Tensor t({1});
    t.data_[0] = v;
    return t;
  }

  static size_t count(const std::vector<int>& shape) {
    size_t n = 1;
    for (int d : shape) {
      if (d <= 0) throw shape_error("tensor dim must be positive");
      n *= static_cast<size_t>(d);
    }
    return n;
  }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  size_t size() const { return data_.size(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  T& operator[](size_t i) { return data_[i]; }
  const T& operator[](size_t i) const { return data_[i]; }

  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }

  // NCHW accessor
  T& at4(int n, int c, int h, int w) {
    return data_[((static_cast<size_t>(n) * shape_[1] + c) * shape_[2] + h) * shape_[3] + w];
  }
  T at4(int n, int c, int h, int w) const {
    return data_[((static_cast<size_t>(n) * shape_[1] + c) * shape_[2] + h) * shape_[3] + w];
  }

  T& at2(int r, int c) { return data_[static_cast<size_t>(r) * shape_[1] + c]; }
  T at2(int r, int c) const { return data_[static_cast<size_t>(r) * shape_[1] + c]; }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  T item() const {
    if (size() != 1) throw shape_error("item() on non-scalar tensor");
    return data_[0];
  }

  std::string shape_str() const {
    std::string s = "[";
    for (size_t i = 0; i < shape_.size(); ++i) s += (i ? "," : "") + std::to_string(shape_[i]);
    return s + "]";
  }

 private:
  std::vector<int> shape_;
  std::vector<T> data_;
};

template <typename T>
void require_same_shape(const Tensor<T>& a, const Tensor<T>& b, const char* op) {
  if (!a.same_shape(b))
    throw shape_error(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

}  // namespace signsynth::nn
