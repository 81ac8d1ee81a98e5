#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcnet/errors.hpp"

namespace pcnet {

/// Dense row-major array of 64-bit reals. Treat returned values as
/// immutable; every free function below allocates fresh storage.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    Tensor(std::vector<std::size_t> shape_in, std::vector<double> data_in);

    static Tensor zeros(std::vector<std::size_t> shape_in);

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }

    /// Rank-2 extent helpers; throw ShapeMismatch on non-matrices.
    std::size_t rows() const;
    std::size_t cols() const;

    // Unchecked rank-2 element access.
    double at(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }
    double& at(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
};

/// True when shapes match and every element is bit-identical
/// (distinguishes -0.0 from 0.0, unlike operator== on doubles).
bool bitwise_equal(const Tensor& a, const Tensor& b);

std::string shape_string(const Tensor& t);

/// Matrix product [m×k]·[k×n] → [m×n]. Each output element accumulates
/// over k in increasing order, left to right, starting from 0.0; combined
/// with -ffp-contract=off this makes the result bit-identical to the
/// naive triple loop on every platform.
Tensor matmul(const Tensor& a, const Tensor& b);

Tensor transpose(const Tensor& a);

// Element-wise operations. Binary ones require identical shapes.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double c);
Tensor relu(const Tensor& a);
/// 1 where x > 0, else 0 (exactly 0 maps to 0).
Tensor relu_grad(const Tensor& a);

/// Adds a length-n vector to every row of an [m×n] matrix.
Tensor add_rowwise(const Tensor& m, const Tensor& v);
/// Column sums of an [m×n] matrix, accumulated in increasing row order.
Tensor colsum(const Tensor& m);

/// Deterministic random source: xoshiro256++ with splitmix64 seeding.
/// A given seed yields the same stream on every platform. Normal deviates
/// use the Box-Muller cosine branch, two uniforms per normal, so the
/// stream position is a pure function of the number of draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, 1), 53-bit resolution.
    double next_uniform();
    /// Standard normal deviate.
    double next_normal();
    /// Uniform integer in [0, n), n > 0 (multiply-shift range reduction).
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t state_[4];
};

/// I.i.d. samples from Normal(0, stddev²); consumes rng state even when
/// stddev is 0.
Tensor randn(const std::vector<std::size_t>& shape, double stddev, Rng& rng);

/// Derives an independent stream seed from a base seed and an index
/// (splitmix64 finalizer over the combination).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace pcnet
