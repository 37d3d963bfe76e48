#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "odd/dataset.hpp"
#include "odd/graph.hpp"

namespace odd {

struct GramMatrix {
    int n = 0;
    std::vector<double> values; // row-major n*n, symmetric
    std::vector<int> graph_ids;
    std::optional<std::vector<int>> class_labels;
    bool normalized = false;
    KernelConfig config;

    double at(int i, int j) const { return values[std::size_t(i) * n + j]; }
};

struct GramTimings {
    double profile_seconds = 0.0;
    double pair_seconds = 0.0;
};

// Builds every profile once, then fills the upper triangle pairwise and
// mirrors it. Both phases fan out over `threads` workers (0 = auto); every
// entry is computed in one fixed order, so the result is byte-identical for
// any thread count. Applies normalization when cfg.normalize is set.
GramMatrix compute_gram(const Dataset& ds, const KernelConfig& cfg, int threads = 0,
                        GramTimings* timings = nullptr);

// values[i][j] / sqrt(values[i][i] * values[j][j]); rejects non-positive
// diagonals naming the graph
GramMatrix normalize(GramMatrix m);

enum class GramFormat { csv, svm_precomputed };

std::optional<GramFormat> parse_gram_format(std::string_view name);

// csv: header row of graph ids, then one row per graph. svm_precomputed:
// "<class> 0:<i> 1:<k(i,1)> ... n:<k(i,n)>" per graph (class 0 when the
// dataset has none). Values are written in shortest round-trip form.
void write_gram(const GramMatrix& m, const std::filesystem::path& path, GramFormat format);

// reads back what write_gram(csv) wrote, bit-exact
GramMatrix read_gram_csv(const std::filesystem::path& path);

} // namespace odd
