#include "odd/kernels.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "odd/numfmt.hpp"
#include "odd/vecops.hpp"

namespace odd {
namespace {

void append_u32(std::string& buf, std::uint32_t v) {
    char tmp[4];
    std::memcpy(tmp, &v, 4);
    buf.append(tmp, 4);
}

void append_u64(std::string& buf, std::uint64_t v) {
    char tmp[8];
    std::memcpy(tmp, &v, 8);
    buf.append(tmp, 8);
}

void append_f64(std::string& buf, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    append_u64(buf, bits);
}

void append_code(std::string& buf, const HashCode& c) {
    append_u64(buf, c.lo);
    append_u64(buf, c.hi);
}

[[noreturn]] void bad_contribution(const HashCode& code, double size) {
    throw std::runtime_error("non-finite kernel contribution at code " + to_hex(code) +
                             " (tree size " + format_double(size) + ")");
}

void check_pairable(const GraphProfile& a, const GraphProfile& b, KernelKind want,
                    int dim_a, int dim_b) {
    if (a.kind() != want || b.kind() != want)
        throw std::invalid_argument(
            std::string("profile kind mismatch: have ") + std::string(kernel_kind_name(a.kind())) +
            " and " + std::string(kernel_kind_name(b.kind())) + ", evaluation needs " +
            std::string(kernel_kind_name(want)));
    if (a.fingerprint() != b.fingerprint())
        throw std::invalid_argument("profiles were built under different configurations");
    if (dim_a != dim_b)
        throw std::invalid_argument("profiles carry different attribute dimensions (" +
                                    std::to_string(dim_a) + " vs " + std::to_string(dim_b) + ")");
}

// shared codes as (index in a, index in b), ascending by code; scans the
// smaller profile and binary-searches the other
std::vector<std::pair<std::size_t, std::size_t>> shared_codes(const std::vector<HashCode>& a,
                                                              const std::vector<HashCode>& b) {
    const bool a_small = a.size() <= b.size();
    const auto& probe = a_small ? a : b;
    const auto& sorted = a_small ? b : a;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < probe.size(); i++) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), probe[i]);
        if (it != sorted.end() && *it == probe[i]) {
            std::size_t j = std::size_t(it - sorted.begin());
            out.emplace_back(a_small ? i : j, a_small ? j : i);
        }
    }
    return out;
}

} // namespace

HashCode config_fingerprint(const KernelConfig& cfg) {
    std::string buf;
    append_u32(buf, static_cast<std::uint32_t>(cfg.h));
    buf.push_back(static_cast<char>(cfg.kind));
    append_f64(buf, cfg.beta);
    append_u32(buf, static_cast<std::uint32_t>(cfg.rff_dim));
    append_u64(buf, cfg.seed);
    return hash128(buf);
}

double lambda_pow(double lambda, double size) {
    if (lambda == 1.0)
        return 1.0;
    return std::exp(size * std::log(lambda));
}

GraphProfile GraphProfile::build(const AttributedGraph& g, const KernelConfig& cfg,
                                 const RffProjection* proj) {
    cfg.validate();
    const bool needs_attrs = cfg.kind != KernelKind::odd_st;
    if (needs_attrs && g.attribute_dim() == 0)
        throw std::invalid_argument("graph " + std::to_string(g.graph_id()) +
                                    " has no attributes; kernel '" +
                                    std::string(kernel_kind_name(cfg.kind)) +
                                    "' needs them (use odd-st)");
    if (cfg.kind == KernelKind::oddcl_approx) {
        if (!proj)
            throw std::invalid_argument("approx profile needs a sampled projection");
        if (proj->input_dim() != g.attribute_dim() || proj->dim() != cfg.rff_dim ||
            proj->beta() != cfg.beta || proj->seed() != cfg.seed)
            throw std::invalid_argument("projection does not match the kernel configuration");
    } else if (proj) {
        throw std::invalid_argument(std::string(kernel_kind_name(cfg.kind)) +
                                    " profiles take no projection");
    }

    GraphProfile p;
    p.kind_ = cfg.kind;
    p.fingerprint_ = config_fingerprint(cfg);
    p.graph_id_ = g.graph_id();
    p.attr_dim_ = g.attribute_dim();
    p.rff_dim_ = cfg.kind == KernelKind::oddcl_approx ? cfg.rff_dim : 0;

    auto [fm, sm] = compute_feature_map(g, cfg.h);
    p.total_insertions_ = fm.total_insertions;
    const std::size_t ncodes = fm.entries.size();
    p.codes_.reserve(ncodes);
    p.sizes_.reserve(ncodes);
    p.total_freq_.reserve(ncodes);

    std::string digest_bytes;
    digest_bytes.push_back(static_cast<char>(cfg.kind));

    std::map<std::string, std::vector<double>> phi_of;
    if (cfg.kind == KernelKind::oddcl_approx) {
        for (int v = 0; v < g.num_nodes(); v++) {
            std::string key = attr_key(g.attributes(v));
            if (!phi_of.contains(key))
                phi_of.emplace(std::move(key), proj->features(g.attributes(v)));
        }
        p.phi_data_.reserve(ncodes * std::size_t(cfg.rff_dim));
    }

    for (const auto& [code, bag] : fm.entries) {
        const double size = sm.at(code);
        p.codes_.push_back(code);
        p.sizes_.push_back(size);
        append_code(digest_bytes, code);
        append_f64(digest_bytes, size);

        double total = 0.0;
        for (const auto& [key, freq] : bag)
            total += double(freq);
        p.total_freq_.push_back(total);

        switch (cfg.kind) {
        case KernelKind::odd_st:
            append_f64(digest_bytes, total);
            break;
        case KernelKind::oddcl_st:
            p.bag_first_.push_back(p.freq_data_.size());
            p.bag_count_.push_back(static_cast<std::uint32_t>(bag.size()));
            for (const auto& [key, freq] : bag) {
                p.freq_data_.push_back(double(freq));
                const std::size_t off = p.attr_data_.size();
                p.attr_data_.resize(off + p.attr_dim_);
                std::memcpy(p.attr_data_.data() + off, key.data(), key.size());
                digest_bytes.append(key);
                append_u64(digest_bytes, freq);
            }
            break;
        case KernelKind::oddcl_approx: {
            std::vector<double> acc(cfg.rff_dim, 0.0);
            for (const auto& [key, freq] : bag)
                vecops::axpy(double(freq), phi_of.at(key).data(), acc.data(), cfg.rff_dim);
            p.phi_data_.insert(p.phi_data_.end(), acc.begin(), acc.end());
            break;
        }
        }
    }
    p.digest_ = hash128(digest_bytes);
    return p;
}

std::span<const double> GraphProfile::bag_attrs(std::size_t e) const {
    return {attr_data_.data() + bag_first_[e] * attr_dim_,
            std::size_t(bag_count_[e]) * attr_dim_};
}

std::span<const double> GraphProfile::bag_freqs(std::size_t e) const {
    return {freq_data_.data() + bag_first_[e], bag_count_[e]};
}

std::span<const double> GraphProfile::phi(std::size_t e) const {
    return {phi_data_.data() + e * rff_dim_, std::size_t(rff_dim_)};
}

double kernel_pair_exact(const GraphProfile& p1, const GraphProfile& p2, double lambda,
                         double beta) {
    check_pairable(p1, p2, KernelKind::oddcl_st, p1.attr_dim_, p2.attr_dim_);
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be a positive real");
    if (!(beta > 0.0))
        throw std::invalid_argument("beta must be a positive real");

    // Fix the summation order from content, not argument position, so
    // k(a, b) and k(b, a) run the identical float program.
    const GraphProfile& a = p1.digest_ <= p2.digest_ ? p1 : p2;
    const GraphProfile& b = p1.digest_ <= p2.digest_ ? p2 : p1;

    const auto& ops = vecops::active_ops();
    const int d = a.attr_dim_;
    double k = 0.0;
    for (auto [ea, eb] : shared_codes(a.codes_, b.codes_)) {
        const double lp = lambda_pow(lambda, a.sizes_[ea]);
        auto fa = a.bag_freqs(ea);
        auto fb = b.bag_freqs(eb);
        auto xa = a.bag_attrs(ea);
        auto xb = b.bag_attrs(eb);
        double s = 0.0;
        for (std::size_t i = 0; i < fa.size(); i++) {
            const double* xi = xa.data() + i * d;
            for (std::size_t j = 0; j < fb.size(); j++) {
                const double* yj = xb.data() + j * d;
                s += (fa[i] * fb[j]) * std::exp(-beta * ops.squared_distance(xi, yj, d));
            }
        }
        const double contrib = lp * s;
        if (!std::isfinite(contrib))
            bad_contribution(a.codes_[ea], a.sizes_[ea]);
        k += contrib;
    }
    return k;
}

double kernel_pair_approx(const GraphProfile& p1, const GraphProfile& p2, double lambda) {
    check_pairable(p1, p2, KernelKind::oddcl_approx, p1.attr_dim_, p2.attr_dim_);
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be a positive real");

    const auto& ops = vecops::active_ops();
    double k = 0.0;
    for (auto [e1, e2] : shared_codes(p1.codes_, p2.codes_)) {
        const double lp = lambda_pow(lambda, p1.sizes_[e1]);
        const double contrib =
            lp * ops.dot(p1.phi(e1).data(), p2.phi(e2).data(), p1.rff_dim_);
        if (!std::isfinite(contrib))
            bad_contribution(p1.codes_[e1], p1.sizes_[e1]);
        k += contrib;
    }
    return k;
}

double kernel_pair_discrete(const GraphProfile& p1, const GraphProfile& p2, double lambda) {
    check_pairable(p1, p2, KernelKind::odd_st, 0, 0);
    if (!(lambda > 0.0))
        throw std::invalid_argument("lambda must be a positive real");

    double k = 0.0;
    for (auto [e1, e2] : shared_codes(p1.codes_, p2.codes_)) {
        const double lp = lambda_pow(lambda, p1.sizes_[e1]);
        const double contrib = lp * (p1.total_freq_[e1] * p2.total_freq_[e2]);
        if (!std::isfinite(contrib))
            bad_contribution(p1.codes_[e1], p1.sizes_[e1]);
        k += contrib;
    }
    return k;
}

} // namespace odd
