#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cssl/rng.hpp"
#include "cssl/tensor.hpp"

namespace cssl {

/// A learnable tensor: value plus accumulated gradient.
class Parameter {
public:
    Parameter() = default;
    Parameter(std::string name, Tensor value, bool trainable = true)
        : name(std::move(name)),
          value(std::move(value)),
          grad(this->value.shape()),
          trainable(trainable) {}

    void zero_grad() { grad.fill(0.0); }

    std::string name;
    Tensor value;
    Tensor grad;
    bool trainable = true;
};

struct Node;
using NodePtr = std::shared_ptr<Node>;

/// One vertex of the recorded computation graph. The graph is rebuilt for
/// every training step; `backward` walks it once in reverse topological
/// order. `backward_fn` distributes this node's gradient into its parents.
struct Node {
    Tensor value;
    Tensor grad; // allocated lazily, only when requires_grad
    bool requires_grad = false;
    Parameter* param = nullptr; // set on parameter leaves
    std::vector<NodePtr> parents;
    std::function<void(Node&)> backward_fn;

    /// Gradient storage, allocated on first use.
    Tensor& grad_ref();
};

/// Leaf carrying a constant value; no gradient flows into it.
NodePtr constant(Tensor v);
/// Leaf bound to a parameter; backward() accumulates into p.grad.
NodePtr leaf(Parameter& p);

// Elementwise / arithmetic
NodePtr add(const NodePtr& a, const NodePtr& b);
NodePtr sub(const NodePtr& a, const NodePtr& b);
NodePtr mul(const NodePtr& a, const NodePtr& b);
NodePtr scale(const NodePtr& a, double s);
NodePtr add_scalar(const NodePtr& a, double s);
NodePtr relu(const NodePtr& a);
/// Inverted dropout: keeps with probability 1-p and rescales by 1/(1-p).
/// Identity when `training` is false or p == 0.
NodePtr dropout(const NodePtr& a, double p, bool training, Rng& rng);

// Network layers
/// Valid (no padding, stride 1) 1D convolution. Input is [Cin x L] or
/// batched [B x Cin x L]; kernels [Cout x Cin x K]; bias [Cout] (optional,
/// pass empty NodePtr to skip).
NodePtr conv1d(const NodePtr& x, const NodePtr& kernels, const NodePtr& bias);
/// Dense layer: x [B x Din], w [Dout x Din], bias [Dout] or empty.
NodePtr linear(const NodePtr& x, const NodePtr& w, const NodePtr& bias);
/// Max over the time axis: [B x C x L] -> [B x C].
NodePtr global_max_pool(const NodePtr& x);

// Reductions & reshapes
NodePtr sum_all(const NodePtr& x);
NodePtr mean_all(const NodePtr& x);
/// L2-normalizes every row of [B x D]; throws NumericError on a zero row.
NodePtr row_normalize(const NodePtr& x);
/// Per-row dot product of two [B x D] tensors -> [B].
NodePtr rows_dot(const NodePtr& a, const NodePtr& b);
NodePtr concat_cols(const NodePtr& a, const NodePtr& b);
NodePtr slice_cols(const NodePtr& x, std::size_t lo, std::size_t hi);
NodePtr select_rows(const NodePtr& x, const std::vector<std::size_t>& rows);

// Losses
/// Mean over the batch of -log softmax(logits)[label].
NodePtr softmax_cross_entropy(const NodePtr& logits,
                              const std::vector<int>& labels);
/// Mean over the batch of -sum_c targets[c] * log softmax(logits)[c];
/// targets are constants.
NodePtr soft_cross_entropy(const NodePtr& logits, const Tensor& targets);

/// Row-wise softmax of a plain rank-2 tensor (no graph).
Tensor softmax_rows(const Tensor& logits);

/// Reverse phase: seeds the scalar loss with gradient 1 and accumulates
/// into every reachable Parameter's grad. Throws on a non-scalar loss.
void backward(const NodePtr& loss);

} // namespace cssl
