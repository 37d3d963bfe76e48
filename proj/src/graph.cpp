#include "odd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace odd {

AttributedGraph AttributedGraph::build(std::vector<NodeRecord> nodes,
                                       const std::vector<std::pair<int, int>>& edges,
                                       int graph_id,
                                       std::optional<int> class_label) {
    AttributedGraph g;
    const int n = static_cast<int>(nodes.size());

    g.attribute_dim_ = n > 0 ? static_cast<int>(nodes[0].attributes.size()) : 0;
    for (int v = 0; v < n; v++) {
        const auto& attrs = nodes[v].attributes;
        if (static_cast<int>(attrs.size()) != g.attribute_dim_)
            throw std::invalid_argument("graph " + std::to_string(graph_id) +
                                        ": node " + std::to_string(v) +
                                        " has attribute width " + std::to_string(attrs.size()) +
                                        ", expected " + std::to_string(g.attribute_dim_));
        for (double x : attrs)
            if (!std::isfinite(x))
                throw std::invalid_argument("graph " + std::to_string(graph_id) +
                                            ": node " + std::to_string(v) +
                                            " has a non-finite attribute");
    }

    g.adjacency_.assign(n, {});
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("graph " + std::to_string(graph_id) +
                                        ": edge (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ") out of range");
        if (a == b)
            continue; // self-loops carry no decomposition information
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.num_edges_ += nbrs.size();
    }
    g.num_edges_ /= 2;

    g.nodes_ = std::move(nodes);
    g.graph_id_ = graph_id;
    g.class_label_ = class_label;
    return g;
}

AttributedGraph degree_as_labels(const AttributedGraph& g) {
    std::vector<NodeRecord> nodes;
    nodes.reserve(g.num_nodes());
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.num_nodes(); v++) {
        nodes.push_back(NodeRecord{intern(std::to_string(g.degree(v))),
                                   {g.attributes(v).begin(), g.attributes(v).end()}});
        for (int w : g.neighbors(v))
            if (v < w)
                edges.emplace_back(v, w);
    }
    return AttributedGraph::build(std::move(nodes), edges, g.graph_id(), g.class_label());
}

std::string_view kernel_kind_name(KernelKind k) {
    switch (k) {
    case KernelKind::odd_st: return "odd-st";
    case KernelKind::oddcl_st: return "oddcl-st";
    case KernelKind::oddcl_approx: return "oddcl-approx";
    }
    return "?";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view name) {
    if (name == "odd-st") return KernelKind::odd_st;
    if (name == "oddcl-st") return KernelKind::oddcl_st;
    if (name == "oddcl-approx") return KernelKind::oddcl_approx;
    return std::nullopt;
}

void KernelConfig::validate() const {
    if (h < 0)
        throw std::invalid_argument("h must be >= 0");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be a positive real");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("beta must be a positive real");
    if (rff_dim < 1)
        throw std::invalid_argument("rff dimension must be >= 1");
}

} // namespace odd
