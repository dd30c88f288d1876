// core/include/tranusr/tensor.h

// Copyright 2026  The tranusr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANUSR_TENSOR_H_
#define TRANUSR_TENSOR_H_

#include <cstdint>
#include <string>
#include <vector>

namespace tranusr::diff {

// Dense row-major tensor of 64-bit floats. Rank 0 (shape {}) is a scalar
// with one element.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape);
  Tensor(std::vector<int64_t> shape, std::vector<double> values);

  static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int64_t> shape, double v);
  static Tensor scalar(double v) { return Tensor({}, {v}); }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
  int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return static_cast<int64_t>(values_.size()); }
  bool empty() const { return values_.empty() && shape_.empty(); }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  double& operator[](int64_t i) { return values_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return values_[static_cast<size_t>(i)]; }

  // 2-D accessors (row-major).
  double& at(int64_t r, int64_t c) { return values_[static_cast<size_t>(r * shape_[1] + c)]; }
  double at(int64_t r, int64_t c) const { return values_[static_cast<size_t>(r * shape_[1] + c)]; }

  // Scalar value; requires numel() == 1.
  double item() const;

  bool requires_grad() const { return requires_grad_; }
  void set_requires_grad(bool rg) { requires_grad_ = rg; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;
  // Throws if any value is NaN or infinite; `what` names the producing op.
  void assert_finite(const std::string& what) const;

  std::string shape_str() const;
  static std::string shape_str(const std::vector<int64_t>& shape);

 private:
  std::vector<int64_t> shape_;
  std::vector<double> values_;
  bool requires_grad_ = false;
};

int64_t shape_numel(const std::vector<int64_t>& shape);

}  // namespace tranusr::diff

#endif  // TRANUSR_TENSOR_H_
