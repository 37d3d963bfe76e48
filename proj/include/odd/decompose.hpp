#pragma once

#include <cstddef>
#include <vector>

#include "odd/graph.hpp"
#include "odd/hash128.hpp"

namespace odd {

// Shortest-path DAG of one root, truncated at depth h. DAG nodes are indexed
// in BFS discovery order (so depth is non-decreasing in the index and any
// reverse index scan is a reverse topological order). Edges go from depth k
// to k+1 only; a node reachable along several shortest paths appears once,
// with all its parents.
//
// order_dag() sorts every child list by the child's code and fills pi_code:
// a leaf's code is the hash of its label, an internal node's code hashes its
// label code plus the ordered child codes. Ties (equal codes) keep ascending
// graph-node order. The ordering is what makes features comparable across
// graphs; until it ran, child lists are in discovery order and pi_code is
// empty.
struct DecompositionDag {
    const AttributedGraph* graph = nullptr;
    int root = 0;                            // graph node id of the root
    std::vector<int> node;                   // DAG index -> graph node id
    std::vector<int> depth;                  // distance from the root
    std::vector<std::vector<int>> children;  // DAG indices
    std::vector<int> parent_count;
    std::vector<HashCode> pi_code;

    int size() const { return static_cast<int>(node.size()); }
    bool is_leaf(int v) const { return children[v].empty(); }
    Symbol label(int v) const { return graph->label(node[v]); }
};

struct DecompositionStats {
    int max_dag_size = 0;      // H_max
    double avg_dag_size = 0.0;
    int rho = 0;               // max DAG out-degree
    std::size_t dag_edges = 0; // total DAG edges built, <= n * m
};

struct Decomposition {
    std::vector<DecompositionDag> dags; // one per root, ascending root id
    DecompositionStats stats;
};

DecompositionDag build_decomposition_dag(const AttributedGraph& g, int root, int h);
void order_dag(DecompositionDag& dag); // idempotent

// build + order for every root
Decomposition decompose_graph(const AttributedGraph& g, int h);

} // namespace odd
