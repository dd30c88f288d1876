// core/src/tensor.cc

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

#include "tranusr/tensor.h"

#include <cmath>
#include <sstream>

#include "tranusr/error.h"

namespace tranusr::diff {

int64_t shape_numel(const std::vector<int64_t>& shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    TRANUSR_CHECK(d >= 0, "negative dimension in shape ", Tensor::shape_str(shape));
    n *= d;
  }
  return n;
}

Tensor::Tensor(std::vector<int64_t> shape)
    : shape_(std::move(shape)),
      values_(static_cast<size_t>(shape_numel(shape_)), 0.0) {}

Tensor::Tensor(std::vector<int64_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  TRANUSR_CHECK(static_cast<int64_t>(values_.size()) == shape_numel(shape_),
                "value count ", values_.size(), " does not match shape ",
                shape_str());
}

Tensor Tensor::full(std::vector<int64_t> shape, double v) {
  Tensor t(std::move(shape));
  for (auto& x : t.values_) x = v;
  return t;
}

double Tensor::item() const {
  TRANUSR_CHECK(numel() == 1, "item() on tensor of shape ", shape_str());
  return values_[0];
}

bool Tensor::all_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Tensor::assert_finite(const std::string& what) const {
  if (!all_finite())
    throw_runtime("non-finite value produced by ", what, " (shape ",
                  shape_str(), ")");
}

std::string Tensor::shape_str(const std::vector<int64_t>& shape) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << "x";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

std::string Tensor::shape_str() const { return shape_str(shape_); }

}  // namespace tranusr::diff
