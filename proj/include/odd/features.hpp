#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "odd/decompose.hpp"
#include "odd/graph.hpp"
#include "odd/hash128.hpp"
#include "odd/node_kernel.hpp"

namespace odd {

// Codes and sizes of the depth-truncated visits T_j(v) of one ordered DAG,
// for every node and every depth 0..h, computed bottom-up without building
// any tree. code(v, 0) is the single-node code; an internal node at depth j
// hashes its label code with the children's depth j-1 codes (children in
// DAG order); a leaf keeps its depth-0 code and size 1 at every depth, so a
// saturated visit keeps one identity across depths. Sizes are doubles:
// exact integers up to 2^53, growing into the float range beyond.
class VisitTable {
public:
    VisitTable(const DecompositionDag& dag, int h);

    int depths() const { return h_ + 1; } // h + 1 rows per node
    const HashCode& code(int v, int j) const { return codes_[idx(v, j)]; }
    double size(int v, int j) const { return sizes_[idx(v, j)]; }

private:
    std::size_t idx(int v, int j) const { return std::size_t(v) * (h_ + 1) + j; }

    int h_;
    std::vector<HashCode> codes_;
    std::vector<double> sizes_;
};

// Attribute vectors are keyed by their exact byte image, so two vectors
// collapse only when they are bit-identical, and map order is canonical
// regardless of insertion order.
std::string attr_key(std::span<const double> attrs);

using AttributeBag = std::map<std::string, std::uint64_t>; // key -> frequency

struct FeatureMap {
    std::map<HashCode, AttributeBag> entries;
    std::uint64_t total_insertions = 0; // == sum over DAGs of |DAG| * (h+1)
};

// code -> node count of the tree it encodes; insert checks that a code never
// claims two different sizes (which would mean a hash collision)
class SizeMap {
public:
    void insert(const HashCode& code, double size);
    double at(const HashCode& code) const;
    const std::map<HashCode, double>& entries() const { return sizes_; }

private:
    std::map<HashCode, double> sizes_;
};

struct RffFeatureMap {
    std::map<HashCode, std::vector<double>> entries; // code -> accumulated phi
    int dim = 0;
};

std::pair<FeatureMap, SizeMap> compute_feature_map(const AttributedGraph& g, int h);

// Same traversal, but every insertion accumulates frequency * phi(attributes)
// into the code's vector. Accumulation runs in (code, attribute-key) order,
// so the result is identical however node ids were permuted.
std::pair<RffFeatureMap, SizeMap> compute_feature_map_rff(const AttributedGraph& g, int h,
                                                          const RffProjection& proj);

// One line per (code, attribute) pair, sorted: hex code, tree size,
// frequency, attribute vector as CSV, tab-separated.
std::string dump_feature_map(const FeatureMap& fm, const SizeMap& sm);

} // namespace odd
