#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace odd {

// exp(-beta * ||x - y||^2); dimensions must match
double gaussian_kernel(std::span<const double> x, std::span<const double> y, double beta);

// 1/d, the width used when the caller asks for "auto"
double default_beta(int attribute_dim);

// Random Fourier features for the Gaussian kernel above:
//   phi_i(x) = sqrt(2/D) * cos(<omega_i, x> + b_i),
// omega entries i.i.d. normal with variance 2*beta, offsets uniform in
// [0, 2pi). Sampling is counter-based from the seed, one fixed stream
// position per entry, so a (seed, dim, input_dim, beta) tuple pins every
// coefficient on any platform.
class RffProjection {
public:
    RffProjection(int dim, int input_dim, double beta, std::uint64_t seed);

    int dim() const { return dim_; }
    int input_dim() const { return input_dim_; }
    double beta() const { return beta_; }
    std::uint64_t seed() const { return seed_; }

    double omega(int i, int j) const { return omega_cols_[std::size_t(j) * dim_ + i]; }
    double offset(int i) const { return offsets_[i]; }

    // phi(x), length dim()
    std::vector<double> features(std::span<const double> x) const;

private:
    int dim_;
    int input_dim_;
    double beta_;
    std::uint64_t seed_;
    std::vector<double> omega_cols_; // column-major: omega(i, j) at j * dim + i
    std::vector<double> offsets_;
};

inline RffProjection sample_projection(int dim, int input_dim, double beta,
                                       std::uint64_t seed) {
    return RffProjection(dim, input_dim, beta, seed);
}

inline std::vector<double> rff_features(std::span<const double> x, const RffProjection& p) {
    return p.features(x);
}

} // namespace odd
