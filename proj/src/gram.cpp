#include "odd/gram.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "odd/kernels.hpp"
#include "odd/numfmt.hpp"
#include "odd/parallel.hpp"

namespace odd {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

GramMatrix compute_gram(const Dataset& ds, const KernelConfig& cfg, int threads,
                        GramTimings* timings) {
    cfg.validate();
    if (threads <= 0)
        threads = default_thread_count();
    const int n = static_cast<int>(ds.graphs.size());
    if (n == 0)
        throw std::invalid_argument("dataset has no graphs");

    if (cfg.kind != KernelKind::odd_st && ds.attribute_dim == 0)
        throw std::invalid_argument("dataset '" + ds.name + "' has no node attributes; kernel '" +
                                    std::string(kernel_kind_name(cfg.kind)) +
                                    "' needs them (use odd-st)");

    std::optional<RffProjection> proj;
    if (cfg.kind == KernelKind::oddcl_approx)
        proj.emplace(cfg.rff_dim, ds.attribute_dim, cfg.beta, cfg.seed);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<GraphProfile> profiles(n);
    parallel_for(n, threads, [&](std::size_t i) {
        profiles[i] = GraphProfile::build(ds.graphs[i], cfg, proj ? &*proj : nullptr);
    });
    if (timings)
        timings->profile_seconds = seconds_since(t0);

    GramMatrix m;
    m.n = n;
    m.values.assign(std::size_t(n) * n, 0.0);
    m.config = cfg;
    m.graph_ids.reserve(n);
    for (const auto& g : ds.graphs)
        m.graph_ids.push_back(g.graph_id());
    if (ds.has_class_labels) {
        std::vector<int> classes;
        classes.reserve(n);
        for (const auto& g : ds.graphs)
            classes.push_back(g.class_label().value_or(0));
        m.class_labels = std::move(classes);
    }

    // upper triangle including the diagonal, row-major
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(n) * (n + 1) / 2);
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++)
            pairs.emplace_back(i, j);

    t0 = std::chrono::steady_clock::now();
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        double v = 0.0;
        switch (cfg.kind) {
        case KernelKind::odd_st:
            v = kernel_pair_discrete(profiles[i], profiles[j], cfg.lambda);
            break;
        case KernelKind::oddcl_st:
            v = kernel_pair_exact(profiles[i], profiles[j], cfg.lambda, cfg.beta);
            break;
        case KernelKind::oddcl_approx:
            v = kernel_pair_approx(profiles[i], profiles[j], cfg.lambda);
            break;
        }
        m.values[std::size_t(i) * n + j] = v;
        m.values[std::size_t(j) * n + i] = v;
    });
    if (timings)
        timings->pair_seconds = seconds_since(t0);

    if (cfg.normalize)
        m = normalize(std::move(m));
    return m;
}

GramMatrix normalize(GramMatrix m) {
    const int n = m.n;
    for (int i = 0; i < n; i++)
        if (!(m.at(i, i) > 0.0))
            throw std::runtime_error("cannot normalize: graph " + std::to_string(m.graph_ids[i]) +
                                     " has self-kernel " + format_double(m.at(i, i)));
    std::vector<double> root(n);
    for (int i = 0; i < n; i++)
        root[i] = std::sqrt(m.at(i, i));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            m.values[std::size_t(i) * n + j] /= root[i] * root[j];
    m.normalized = true;
    return m;
}

std::optional<GramFormat> parse_gram_format(std::string_view name) {
    if (name == "csv")
        return GramFormat::csv;
    if (name == "svm-precomputed")
        return GramFormat::svm_precomputed;
    return std::nullopt;
}

void write_gram(const GramMatrix& m, const std::filesystem::path& path, GramFormat format) {
    for (double v : m.values)
        if (!std::isfinite(v))
            throw std::runtime_error("matrix holds a non-finite value; refusing to write");

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");

    switch (format) {
    case GramFormat::csv:
        for (int j = 0; j < m.n; j++)
            out << (j ? "," : "") << m.graph_ids[j];
        out << "\n";
        for (int i = 0; i < m.n; i++) {
            for (int j = 0; j < m.n; j++)
                out << (j ? "," : "") << format_double(m.at(i, j));
            out << "\n";
        }
        break;
    case GramFormat::svm_precomputed:
        for (int i = 0; i < m.n; i++) {
            out << (m.class_labels ? (*m.class_labels)[i] : 0) << " 0:" << i + 1;
            for (int j = 0; j < m.n; j++)
                out << " " << j + 1 << ":" << format_double(m.at(i, j));
            out << "\n";
        }
        break;
    }
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

GramMatrix read_gram_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path.string() + ": empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();

    GramMatrix m;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t comma = line.find(',', start);
        std::string_view tok(line.data() + start,
                             (comma == std::string::npos ? line.size() : comma) - start);
        m.graph_ids.push_back(static_cast<int>(parse_int_token(tok)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    m.n = static_cast<int>(m.graph_ids.size());
    m.values.reserve(std::size_t(m.n) * m.n);
    for (int i = 0; i < m.n; i++) {
        if (!std::getline(in, line))
            throw std::runtime_error(path.string() + ": expected " + std::to_string(m.n) +
                                     " rows, got " + std::to_string(i));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        start = 0;
        for (int j = 0; j < m.n; j++) {
            std::size_t comma = line.find(',', start);
            std::string_view tok(line.data() + start,
                                 (comma == std::string::npos ? line.size() : comma) - start);
            m.values.push_back(parse_double_token(tok));
            start = comma == std::string::npos ? line.size() + 1 : comma + 1;
        }
    }
    if (m.values.size() != std::size_t(m.n) * m.n)
        throw std::runtime_error(path.string() + ": matrix is not square");
    return m;
}

} // namespace odd
