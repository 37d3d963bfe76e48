#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "odd/graph.hpp"

namespace odd {

struct Dataset {
    std::string name;
    std::vector<AttributedGraph> graphs;
    int attribute_dim = 0;
    bool has_node_labels = false; // false: labels are degree fallback
    bool has_class_labels = false;
};

struct DatasetStats {
    int num_graphs = 0;
    double avg_nodes = 0.0;
    double avg_edges = 0.0; // undirected edges counted once
    int attribute_dim = 0;
    int num_classes = 0;
    int max_outdegree = 0;
};

// Reads the <name>_*.txt family from dir: edge list (_A), node-to-graph map
// (_graph_indicator), and the optional node labels, node attributes and
// graph class labels. Edges may be listed in one or both directions; the
// result is always symmetric and deduplicated. Without a label file every
// node is labeled with its degree. Errors name the file (and line) that
// broke.
Dataset parse_tu_dataset(const std::filesystem::path& dir, const std::string& name);

// Replaces every node label with the node's degree, as parse_tu_dataset
// does when no label file exists.
Dataset relabel_by_degree(const Dataset& ds);

DatasetStats dataset_stats(const Dataset& ds);

// Writes ds back as a TU-format file family (each edge in both directions).
// Labels and attributes round-trip exactly; reparsing yields the same
// graphs.
void write_tu_dataset(const Dataset& ds, const std::filesystem::path& dir);

} // namespace odd
