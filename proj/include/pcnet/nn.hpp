#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcnet/tensor.hpp"

namespace pcnet {

enum class BlockKind : std::uint8_t {
    Input = 0,
    Residual = 1,
    Output = 2,
};

/// One stack element: two dense layers with a relu between them.
/// Residual blocks add the identity shortcut, so zero branch parameters
/// make the block the identity map; their input and output widths match.
struct BlockParams {
    BlockKind kind = BlockKind::Residual;
    Tensor w1;  // [hidden×in]
    Tensor b1;  // [hidden]
    Tensor w2;  // [out×hidden]
    Tensor b2;  // [out]
};

/// Mini-batch intermediates kept for the backward pass.
struct BlockCache {
    Tensor input;
    Tensor pre1;   // first-layer pre-activation
    Tensor post1;  // relu(pre1)
    Tensor output;
};

struct BlockGrads {
    Tensor w1;
    Tensor b1;
    Tensor w2;
    Tensor b2;
};

/// He initialization: w ~ Normal(0, 2/fan_in), b = 0. Consumes rng for
/// w1 then w2.
BlockParams init_block(BlockKind kind, std::size_t in, std::size_t hidden, std::size_t out,
                       Rng& rng);

/// y = w2·relu(w1·x + b1) + b2, plus x for Residual blocks. x is [batch×in].
std::pair<Tensor, BlockCache> block_forward(const BlockParams& p, const Tensor& x);

/// Exact reverse-mode gradients of block_forward. For Residual blocks dx
/// includes the shortcut term dy.
std::pair<Tensor, BlockGrads> block_backward(const BlockParams& p, const BlockCache& cache,
                                             const Tensor& dy);

/// Batch-mean cross entropy with max-subtracted softmax.
/// Returns (loss, dlogits) where dlogits = (softmax − onehot)/batch.
std::pair<double, Tensor> softmax_xent(const Tensor& logits, const std::vector<int>& labels);

/// Fraction of rows whose argmax equals the label; ties break to the
/// lowest index.
double accuracy(const Tensor& logits, const std::vector<int>& labels);

bool bitwise_equal(const BlockParams& a, const BlockParams& b);

}  // namespace pcnet
