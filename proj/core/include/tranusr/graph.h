// core/include/tranusr/graph.h

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

#ifndef TRANUSR_GRAPH_H_
#define TRANUSR_GRAPH_H_

#include <functional>
#include <string>
#include <vector>

#include "tranusr/tensor.h"

namespace tranusr::diff {

class Graph;

// Named trainable tensor. Gradients accumulate across backward passes until
// zero_grad(); optimizer state lives with the optimizer, keyed by name.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;  // empty until first accumulation

  void zero_grad() { grad = Tensor(); }
};

// Handle into a Graph's tape. Cheap to copy; valid while the graph lives.
class Var {
 public:
  Var() = default;
  Var(Graph* g, int id) : graph_(g), id_(id) {}
  bool valid() const { return graph_ != nullptr; }
  int id() const { return id_; }
  Graph* graph() const { return graph_; }
  const Tensor& value() const;
  const Tensor& grad() const;

 private:
  Graph* graph_ = nullptr;
  int id_ = -1;
};

// Reverse-mode tape. One Graph per forward pass; nodes are immutable once
// created. backward() walks the tape in reverse creation order, which is a
// valid topological order by construction.
class Graph {
 public:
  using BackwardFn = std::function<void(Graph&, int self)>;

  struct Node {
    Tensor value;
    Tensor grad;  // empty until backward touches it
    bool requires_grad = false;
    Parameter* param = nullptr;
    BackwardFn backward;
  };

  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  // --- leaves ---
  Var leaf(Tensor value, bool requires_grad);
  Var constant(Tensor value) { return leaf(std::move(value), false); }
  // Leaf bound to a parameter; after backward() the node gradient has been
  // accumulated into param.grad. trainable=false detaches it (teacher pass).
  Var param(Parameter& p, bool trainable = true);

  // --- elementwise / structural ops ---
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);
  Var scale(Var a, double c);
  Var add_rowvec(Var x, Var v);         // x:[T,D] + v:[D] broadcast over rows
  Var matmul(Var a, Var b);             // [m,k] x [k,n]
  Var transpose(Var a);                 // 2-D
  Var slice_cols(Var x, int64_t begin, int64_t end);
  Var concat_cols(const std::vector<Var>& xs);
  Var gather_rows(Var x, std::vector<int64_t> rows);
  // Rows where mask is true are replaced by the broadcast row vector.
  Var replace_rows(Var x, std::vector<bool> mask, Var row);
  Var sum(Var x);                       // scalar
  Var mean(Var x);                      // scalar

  // --- layers ---
  Var conv1d(Var x, Var w, Var b, int stride, int padding);  // x:[T,Cin] w:[K,Cin,Cout] b:[Cout]
  Var layer_norm(Var x, Var gamma, Var beta, double eps);    // per row
  Var gelu(Var x);                                           // exact erf form
  Var log_softmax(Var x, int axis);                          // 2-D, axis 0 or 1
  // Row softmax; entries of `exclude` that are true get zero weight. An
  // all-false (or absent) exclusion equals plain softmax.
  Var softmax_rows(Var x, const std::vector<bool>* exclude = nullptr);

  // --- losses ---
  // Mean over all elements of the smooth-L1 between pred and a constant
  // target: 0.5*d^2/beta for |d| <= beta, |d| - beta/2 otherwise.
  Var smooth_l1(Var pred, const Tensor& target, double beta);
  // Mean negative log-likelihood over rows whose target differs from
  // ignore_index (pass -1 to ignore nothing).
  Var cross_entropy(Var logits, const std::vector<int>& targets, int ignore_index);

  // Extension point for ops defined outside this translation unit (CTC lives
  // with the other sequence losses). parents' grads are accumulated via
  // accumulate_grad() from the backward function.
  Var make_node(Tensor value, const std::vector<Var>& parents, BackwardFn backward,
                const char* op_name);

  // Seeds d(loss)/d(loss) = 1 and propagates along the tape in reverse.
  // Gradients of parameter-bound leaves are added into Parameter::grad.
  void backward(Var loss);

  const Tensor& value(Var v) const { return nodes_[static_cast<size_t>(v.id())].value; }
  const Tensor& grad(Var v) const;
  bool requires_grad(Var v) const { return nodes_[static_cast<size_t>(v.id())].requires_grad; }
  size_t size() const { return nodes_.size(); }

  // Adds `delta` into the gradient buffer of node `id` (no-op when the node
  // does not require grad). For use by backward functions.
  void accumulate_grad(int id, const Tensor& delta);
  void accumulate_grad_at(int id, int64_t flat_index, double delta);
  Node& node(int id) { return nodes_[static_cast<size_t>(id)]; }
  const Node& node(int id) const { return nodes_[static_cast<size_t>(id)]; }

 private:
  Var finish(Node&& n, const char* op_name);
  std::vector<Node> nodes_;
};

// Sinusoidal position table, shape [length, dim].
Tensor sinusoidal_positions(int64_t length, int64_t dim);

// Per-channel normalization over the time axis: for each column c,
// (x[:,c] - mean_c) / sqrt(var_c + eps). Used on teacher layer outputs.
Tensor instance_norm(const Tensor& x, double eps = 1e-6);

// Central-difference gradient of a scalar function at x, step h per
// coordinate: (f(x + h e_i) - f(x - h e_i)) / 2h. Test oracle for every
// reverse-mode gradient in this library.
Tensor finite_difference_gradient(const std::function<double(const Tensor&)>& f,
                                  const Tensor& x, double h);

}  // namespace tranusr::diff

#endif  // TRANUSR_GRAPH_H_
