#include "pcnet/tensor.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

namespace pcnet {

namespace {

std::size_t checked_count(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t e : shape) {
        if (e == 0) {
            throw ShapeMismatch("tensor extents must be positive");
        }
        n *= e;
    }
    return n;
}

void require_matrix(const Tensor& t, const char* who) {
    if (t.rank() != 2) {
        throw ShapeMismatch(std::string(who) + ": expected a rank-2 tensor, got " + shape_string(t));
    }
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* who) {
    if (a.shape != b.shape) {
        throw ShapeMismatch(std::string(who) + ": operand shapes differ, " + shape_string(a) +
                            " vs " + shape_string(b));
    }
}

template <class F>
Tensor map(const Tensor& a, F f) {
    Tensor out = a;
    for (double& v : out.data) {
        v = f(v);
    }
    return out;
}

template <class F>
Tensor zip(const Tensor& a, const Tensor& b, const char* who, F f) {
    require_same_shape(a, b, who);
    Tensor out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        out.data[i] = f(a.data[i], b.data[i]);
    }
    return out;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape_in, std::vector<double> data_in)
    : shape(std::move(shape_in)), data(std::move(data_in)) {
    if (checked_count(shape) != data.size()) {
        throw ShapeMismatch("tensor data length does not match shape product");
    }
}

Tensor Tensor::zeros(std::vector<std::size_t> shape_in) {
    const std::size_t n = checked_count(shape_in);
    Tensor t;
    t.shape = std::move(shape_in);
    t.data.assign(n, 0.0);
    return t;
}

std::size_t Tensor::rows() const {
    require_matrix(*this, "rows");
    return shape[0];
}

std::size_t Tensor::cols() const {
    require_matrix(*this, "cols");
    return shape[1];
}

bool bitwise_equal(const Tensor& a, const Tensor& b) {
    if (a.shape != b.shape) {
        return false;
    }
    return a.data.empty() ||
           std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(double)) == 0;
}

std::string shape_string(const Tensor& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.shape.size(); ++i) {
        if (i) {
            s += "x";
        }
        s += std::to_string(t.shape[i]);
    }
    return s + "]";
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    require_matrix(a, "matmul");
    require_matrix(b, "matmul");
    if (a.shape[1] != b.shape[0]) {
        throw ShapeMismatch("matmul: inner extents differ, " + shape_string(a) + " vs " +
                            shape_string(b));
    }
    const std::size_t m = a.shape[0];
    const std::size_t kk = a.shape[1];
    const std::size_t n = b.shape[1];
    Tensor c = Tensor::zeros({m, n});
    const double* pa = a.data.data();
    const double* pb = b.data.data();
    double* pc = c.data.data();
    // i-k-j order: every c(i,j) still accumulates over k left to right,
    // matching the naive i-j-k loop bit for bit, while walking b and c
    // contiguously.
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = pa + i * kk;
        double* crow = pc + i * n;
        for (std::size_t k = 0; k < kk; ++k) {
            const double aik = arow[k];
            const double* brow = pb + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
    return c;
}

Tensor transpose(const Tensor& a) {
    require_matrix(a, "transpose");
    const std::size_t m = a.shape[0];
    const std::size_t n = a.shape[1];
    Tensor t = Tensor::zeros({n, m});
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t.data[j * m + i] = a.data[i * n + j];
        }
    }
    return t;
}

Tensor add(const Tensor& a, const Tensor& b) {
    return zip(a, b, "add", [](double x, double y) { return x + y; });
}

Tensor sub(const Tensor& a, const Tensor& b) {
    return zip(a, b, "sub", [](double x, double y) { return x - y; });
}

Tensor mul(const Tensor& a, const Tensor& b) {
    return zip(a, b, "mul", [](double x, double y) { return x * y; });
}

Tensor scale(const Tensor& a, double c) {
    return map(a, [c](double x) { return c * x; });
}

Tensor relu(const Tensor& a) {
    return map(a, [](double x) { return x > 0.0 ? x : 0.0; });
}

Tensor relu_grad(const Tensor& a) {
    return map(a, [](double x) { return x > 0.0 ? 1.0 : 0.0; });
}

Tensor add_rowwise(const Tensor& m, const Tensor& v) {
    require_matrix(m, "add_rowwise");
    if (v.rank() != 1 || v.shape[0] != m.shape[1]) {
        throw ShapeMismatch("add_rowwise: vector length " + shape_string(v) +
                            " does not match row width of " + shape_string(m));
    }
    Tensor out = m;
    const std::size_t rows = m.shape[0];
    const std::size_t cols = m.shape[1];
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out.data[i * cols + j] += v.data[j];
        }
    }
    return out;
}

Tensor colsum(const Tensor& m) {
    require_matrix(m, "colsum");
    const std::size_t rows = m.shape[0];
    const std::size_t cols = m.shape[1];
    Tensor out = Tensor::zeros({cols});
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out.data[j] += m.data[i * cols + j];
        }
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) {
        w = splitmix64(s);
    }
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_normal() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n == 0) {
        throw Error("Rng::next_below: n must be positive");
    }
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

Tensor randn(const std::vector<std::size_t>& shape, double stddev, Rng& rng) {
    if (stddev < 0.0) {
        throw Error("randn: stddev must be non-negative");
    }
    Tensor t = Tensor::zeros(shape);
    for (double& v : t.data) {
        v = stddev * rng.next_normal();
    }
    return t;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace pcnet
