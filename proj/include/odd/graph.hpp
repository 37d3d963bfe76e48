#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "odd/symtab.hpp"

namespace odd {

struct NodeRecord {
    Symbol label = 0;
    std::vector<double> attributes; // size == attribute_dim of the graph
};

// Undirected node-labeled graph with optional fixed-width real attributes.
// Immutable after construction; the factory symmetrizes and deduplicates the
// edge list, drops self-loops, and rejects non-finite attributes or ragged
// attribute rows. attribute_dim() == 0 means a purely discrete graph.
class AttributedGraph {
public:
    AttributedGraph() = default;

    static AttributedGraph build(std::vector<NodeRecord> nodes,
                                 const std::vector<std::pair<int, int>>& edges,
                                 int graph_id = 0,
                                 std::optional<int> class_label = std::nullopt);

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    std::size_t num_edges() const { return num_edges_; } // undirected count
    int attribute_dim() const { return attribute_dim_; }
    int graph_id() const { return graph_id_; }
    std::optional<int> class_label() const { return class_label_; }

    const NodeRecord& node(int v) const { return nodes_[v]; }
    Symbol label(int v) const { return nodes_[v].label; }
    std::span<const double> attributes(int v) const { return nodes_[v].attributes; }
    // neighbor ids, strictly ascending
    std::span<const int> neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

private:
    std::vector<NodeRecord> nodes_;
    std::vector<std::vector<int>> adjacency_;
    std::size_t num_edges_ = 0;
    int attribute_dim_ = 0;
    int graph_id_ = 0;
    std::optional<int> class_label_;
};

// Copy of g whose labels are the decimal degree of each node. Used when a
// dataset ships no label file, and as an explicit option for experiments.
AttributedGraph degree_as_labels(const AttributedGraph& g);

enum class KernelKind { odd_st, oddcl_st, oddcl_approx };

std::string_view kernel_kind_name(KernelKind k);
std::optional<KernelKind> parse_kernel_kind(std::string_view name);

// Parameters shared by every kernel entry point. validate() enforces the
// ranges; beta and rff_dim are carried (and fingerprinted) even by kinds
// that ignore them.
struct KernelConfig {
    int h = 1;                 // decomposition depth, >= 0
    double lambda = 1.0;       // subtree weight, > 0
    double beta = 1.0;         // attribute kernel width, > 0
    int rff_dim = 1000;        // projected feature count D, >= 1
    std::uint64_t seed = 1;    // projection sampling seed
    bool normalize = false;
    KernelKind kind = KernelKind::oddcl_st;

    void validate() const; // throws std::invalid_argument
};

} // namespace odd
