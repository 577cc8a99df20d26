#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hwm/core/dense_array.h"

namespace hwm {

class Tape;

// Handle to a node on a Tape.
struct Var {
  Tape* tape = nullptr;
  int id = -1;

  const Mat& value() const;
  const Mat& grad() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
};

// Reverse-mode differentiation over batched matrix primitives.
//
// Every op records its output value and a closure that propagates the output
// gradient to its inputs. Parameter leaves write their gradient into
// Param::grad when Backward finishes; frozen leaves take part in the forward
// pass but never receive gradient.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var Constant(Mat value);
  // Leaf whose gradient is kept on the tape (read it with Var::grad()).
  Var Input(Mat value);
  Var Parameter(Param& param);
  Var Frozen(const Param& param);

  // Requires a 1x1 loss. Accumulates (+=) into Param::grad.
  void Backward(Var loss);

  std::size_t num_nodes() const { return nodes_.size(); }

  // Internal API used by the op implementations.
  struct Node {
    Mat value;
    Mat grad;
    bool needs_grad = false;
    Param* param = nullptr;
    std::function<void(Tape&, int)> backward;
  };
  Var Push(Mat value, bool needs_grad, std::function<void(Tape&, int)> backward);
  Node& node(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  // Adds `g` into the gradient of node `id` when that node needs it.
  void Accumulate(int id, const Mat& g);

 private:
  std::vector<Node> nodes_;
};

// y = x W + b, b broadcast over rows.
Var Linear(Var x, Var w, Var b);
Var MatMul(Var x, Var w);
// Per-row normalization followed by the affine gamma, beta (both 1 x n).
Var LayerNorm(Var x, Var gamma, Var beta, double eps);
Var Mish(Var x);
Var Tanh(Var x);
Var Sigmoid(Var x);
Var Exp(Var x);
Var Square(Var x);
Var Add(Var a, Var b);
Var Sub(Var a, Var b);
Var Mul(Var a, Var b);
Var Scale(Var x, double c);
Var AddScalar(Var x, double c);
// Multiplies each row i by weights(i) (weights is a constant column).
Var ScaleRows(Var x, const Vec& weights);
Var ConcatCols(std::span<const Var> parts);
Var SliceCols(Var x, int start, int count);
Var Sum(Var x);
Var Mean(Var x);
Var RowSum(Var x);
Var RowMean(Var x);
// Elementwise binary cross-entropy of sigmoid(logits) against fixed targets.
Var BceWithLogits(Var logits, const Mat& targets);
Var StopGradient(Var x);

}  // namespace hwm
