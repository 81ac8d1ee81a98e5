#include "pcnet/nn.hpp"

#include <cmath>
#include <string>

namespace pcnet {

BlockParams init_block(BlockKind kind, std::size_t in, std::size_t hidden, std::size_t out,
                       Rng& rng) {
    if (in == 0 || hidden == 0 || out == 0) {
        throw ShapeMismatch("init_block: widths must be positive");
    }
    if (kind == BlockKind::Residual && in != out) {
        throw ShapeMismatch("init_block: a residual block needs in == out, got " +
                            std::to_string(in) + " vs " + std::to_string(out));
    }
    BlockParams p;
    p.kind = kind;
    p.w1 = randn({hidden, in}, std::sqrt(2.0 / static_cast<double>(in)), rng);
    p.b1 = Tensor::zeros({hidden});
    p.w2 = randn({out, hidden}, std::sqrt(2.0 / static_cast<double>(hidden)), rng);
    p.b2 = Tensor::zeros({out});
    return p;
}

std::pair<Tensor, BlockCache> block_forward(const BlockParams& p, const Tensor& x) {
    if (x.rank() != 2 || x.shape[1] != p.w1.shape[1]) {
        throw ShapeMismatch("block_forward: input " + shape_string(x) +
                            " does not match weight " + shape_string(p.w1));
    }
    BlockCache cache;
    cache.input = x;
    cache.pre1 = add_rowwise(matmul(x, transpose(p.w1)), p.b1);
    cache.post1 = relu(cache.pre1);
    Tensor y = add_rowwise(matmul(cache.post1, transpose(p.w2)), p.b2);
    if (p.kind == BlockKind::Residual) {
        y = add(x, y);
    }
    cache.output = y;
    return {std::move(y), std::move(cache)};
}

std::pair<Tensor, BlockGrads> block_backward(const BlockParams& p, const BlockCache& cache,
                                             const Tensor& dy) {
    if (dy.shape != cache.output.shape) {
        throw ShapeMismatch("block_backward: dy " + shape_string(dy) +
                            " does not match block output " + shape_string(cache.output));
    }
    BlockGrads g;
    g.w2 = matmul(transpose(dy), cache.post1);
    g.b2 = colsum(dy);
    const Tensor dz1 = mul(matmul(dy, p.w2), relu_grad(cache.pre1));
    g.w1 = matmul(transpose(dz1), cache.input);
    g.b1 = colsum(dz1);
    Tensor dx = matmul(dz1, p.w1);
    if (p.kind == BlockKind::Residual) {
        dx = add(dy, dx);
    }
    return {std::move(dx), std::move(g)};
}

namespace {

void require_labels(const Tensor& logits, const std::vector<int>& labels, const char* who) {
    if (logits.rank() != 2) {
        throw ShapeMismatch(std::string(who) + ": logits must be rank 2");
    }
    if (labels.size() != logits.shape[0]) {
        throw ShapeMismatch(std::string(who) + ": label count does not match batch size");
    }
    const int num_classes = static_cast<int>(logits.shape[1]);
    for (int label : labels) {
        if (label < 0 || label >= num_classes) {
            throw LabelOutOfRange(std::string(who) + ": label " + std::to_string(label) +
                                  " outside [0, " + std::to_string(num_classes) + ")");
        }
    }
}

}  // namespace

std::pair<double, Tensor> softmax_xent(const Tensor& logits, const std::vector<int>& labels) {
    require_labels(logits, labels, "softmax_xent");
    const std::size_t batch = logits.shape[0];
    const std::size_t classes = logits.shape[1];
    Tensor dlogits = Tensor::zeros({batch, classes});
    double loss = 0.0;
    for (std::size_t i = 0; i < batch; ++i) {
        const double* row = logits.data.data() + i * classes;
        double mx = row[0];
        for (std::size_t c = 1; c < classes; ++c) {
            mx = row[c] > mx ? row[c] : mx;
        }
        double denom = 0.0;
        for (std::size_t c = 0; c < classes; ++c) {
            denom += std::exp(row[c] - mx);
        }
        const auto label = static_cast<std::size_t>(labels[i]);
        loss += std::log(denom) - (row[label] - mx);
        double* drow = dlogits.data.data() + i * classes;
        for (std::size_t c = 0; c < classes; ++c) {
            drow[c] = std::exp(row[c] - mx) / denom;
        }
        drow[label] -= 1.0;
    }
    const double inv_batch = 1.0 / static_cast<double>(batch);
    for (double& v : dlogits.data) {
        v *= inv_batch;
    }
    return {loss * inv_batch, std::move(dlogits)};
}

double accuracy(const Tensor& logits, const std::vector<int>& labels) {
    require_labels(logits, labels, "accuracy");
    const std::size_t batch = logits.shape[0];
    const std::size_t classes = logits.shape[1];
    std::size_t hits = 0;
    for (std::size_t i = 0; i < batch; ++i) {
        const double* row = logits.data.data() + i * classes;
        std::size_t best = 0;
        for (std::size_t c = 1; c < classes; ++c) {
            if (row[c] > row[best]) {
                best = c;
            }
        }
        if (best == static_cast<std::size_t>(labels[i])) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(batch);
}

bool bitwise_equal(const BlockParams& a, const BlockParams& b) {
    return a.kind == b.kind && bitwise_equal(a.w1, b.w1) && bitwise_equal(a.b1, b.b1) &&
           bitwise_equal(a.w2, b.w2) && bitwise_equal(a.b2, b.b2);
}

}  // namespace pcnet
