#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "odd/features.hpp"
#include "odd/graph.hpp"
#include "odd/hash128.hpp"
#include "odd/node_kernel.hpp"

namespace odd {

// Everything a pairwise kernel evaluation needs from one graph, frozen into
// code-sorted flat arrays:
//   odd-st       code, size, total frequency (attributes ignored)
//   oddcl-st     code, size, attribute bag (distinct vectors + frequencies)
//   oddcl-approx code, size, accumulated projected vector
// A fingerprint of (h, kind, beta, D, seed) guards against mixing profiles
// built under different configurations; lambda is applied at evaluation
// time, so one profile serves any lambda.
class GraphProfile {
public:
    GraphProfile() = default; // empty; unusable until assigned from build()

    // proj is required for the approx kind and must agree with cfg and the
    // graph's attribute dimension; other kinds take proj == nullptr.
    static GraphProfile build(const AttributedGraph& g, const KernelConfig& cfg,
                              const RffProjection* proj = nullptr);

    KernelKind kind() const { return kind_; }
    const HashCode& fingerprint() const { return fingerprint_; }
    int graph_id() const { return graph_id_; }
    std::size_t num_codes() const { return codes_.size(); }
    std::uint64_t total_insertions() const { return total_insertions_; }

    // content identity; equal for graphs that differ only by node numbering
    const HashCode& digest() const { return digest_; }

    friend double kernel_pair_exact(const GraphProfile&, const GraphProfile&, double lambda,
                                    double beta);
    friend double kernel_pair_approx(const GraphProfile&, const GraphProfile&, double lambda);
    friend double kernel_pair_discrete(const GraphProfile&, const GraphProfile&, double lambda);

private:
    std::span<const double> bag_attrs(std::size_t e) const;
    std::span<const double> bag_freqs(std::size_t e) const;
    std::span<const double> phi(std::size_t e) const;

    KernelKind kind_ = KernelKind::oddcl_st;
    HashCode fingerprint_;
    HashCode digest_;
    int graph_id_ = 0;
    int attr_dim_ = 0;
    int rff_dim_ = 0;
    std::uint64_t total_insertions_ = 0;

    std::vector<HashCode> codes_; // ascending
    std::vector<double> sizes_;
    std::vector<double> total_freq_;
    std::vector<std::uint64_t> bag_first_; // exact: slice of attr/freq arrays
    std::vector<std::uint32_t> bag_count_;
    std::vector<double> attr_data_;
    std::vector<double> freq_data_;
    std::vector<double> phi_data_; // approx: num_codes * rff_dim
};

HashCode config_fingerprint(const KernelConfig& cfg);

// lambda^size as exp(size * ln lambda); exactly 1 when lambda == 1
double lambda_pow(double lambda, double size);

// sum over shared codes of lambda^size * sum_{x in bag1, y in bag2}
// f1(x) f2(y) exp(-beta ||x-y||^2). Throws if the profiles were built under
// different configurations or a contribution leaves the finite range.
double kernel_pair_exact(const GraphProfile& p1, const GraphProfile& p2, double lambda,
                         double beta);

// sum over shared codes of lambda^size * <phi1, phi2>
double kernel_pair_approx(const GraphProfile& p1, const GraphProfile& p2, double lambda);

// sum over shared codes of lambda^size * totalfreq1 * totalfreq2
double kernel_pair_discrete(const GraphProfile& p1, const GraphProfile& p2, double lambda);

} // namespace odd
