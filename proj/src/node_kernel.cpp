#include "odd/node_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "odd/rng.hpp"
#include "odd/vecops.hpp"

namespace odd {

double gaussian_kernel(std::span<const double> x, std::span<const double> y, double beta) {
    if (x.size() != y.size())
        throw std::invalid_argument("attribute dimensions differ: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
    return std::exp(-beta * vecops::squared_distance(x.data(), y.data(), x.size()));
}

double default_beta(int attribute_dim) {
    if (attribute_dim <= 0)
        throw std::invalid_argument("default beta needs attribute dimension >= 1");
    return 1.0 / attribute_dim;
}

RffProjection::RffProjection(int dim, int input_dim, double beta, std::uint64_t seed)
    : dim_(dim), input_dim_(input_dim), beta_(beta), seed_(seed) {
    if (dim < 1)
        throw std::invalid_argument("projection dimension must be >= 1");
    if (input_dim < 1)
        throw std::invalid_argument("projection input dimension must be >= 1");
    if (!(beta > 0.0))
        throw std::invalid_argument("beta must be a positive real");

    CounterRng rng(seed);
    const double sigma = std::sqrt(2.0 * beta);
    omega_cols_.resize(std::size_t(dim) * input_dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < input_dim; j++) {
            // one normal deviate per entry from stream slots (2k, 2k+1)
            std::uint64_t k = std::uint64_t(i) * input_dim + j;
            double u1 = 1.0 - rng.uniform01(2 * k); // (0, 1], safe for log
            double u2 = rng.uniform01(2 * k + 1);
            double z = std::sqrt(-2.0 * std::log(u1)) *
                       std::cos(2.0 * std::numbers::pi * u2);
            omega_cols_[std::size_t(j) * dim + i] = sigma * z;
        }
    }
    offsets_.resize(dim);
    const std::uint64_t offset_base = 2 * std::uint64_t(dim) * input_dim;
    for (int i = 0; i < dim; i++)
        offsets_[i] = 2.0 * std::numbers::pi * rng.uniform01(offset_base + i);
}

std::vector<double> RffProjection::features(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != input_dim_)
        throw std::invalid_argument("projection expects dimension " + std::to_string(input_dim_) +
                                    ", got " + std::to_string(x.size()));
    std::vector<double> out = offsets_;
    for (int j = 0; j < input_dim_; j++)
        vecops::axpy(x[j], omega_cols_.data() + std::size_t(j) * dim_, out.data(), dim_);
    const double scale = std::sqrt(2.0 / dim_);
    for (double& v : out)
        v = scale * std::cos(v);
    return out;
}

} // namespace odd
