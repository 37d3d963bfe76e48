#pragma once

#include <vector>

#include "odd/decompose.hpp"
#include "odd/graph.hpp"

namespace odd {

// Brute-force reference path: materialize every depth-truncated visit as a
// real tree (duplicating nodes reached along several paths) and evaluate the
// tree-pair recursions directly. Exponentially slower than the production
// path on purpose; tests compare the two on small graphs.
struct ExplicitTree {
    Symbol label = 0;
    std::vector<double> attributes;
    std::vector<ExplicitTree> children; // in DAG order

    std::size_t node_count() const;
};

// the visit T_j(v); dag must be ordered
ExplicitTree enumerate_tree_visit(const DecompositionDag& dag, int v, int j);

// lambda^|t| when t1 and t2 are identical ordered labeled trees, else 0,
// written as the standard recursion over aligned children
double c_st_direct(const ExplicitTree& t1, const ExplicitTree& t2, double lambda);

// Gaussian factor on the roots' attributes times c_st_direct; 0 when the
// structures differ
double c_cst_direct(const ExplicitTree& t1, const ExplicitTree& t2, double lambda, double beta);

// order-sensitive variant that weighs every aligned node pair with the
// Gaussian factor; kept as a reference for the positional-comparison rule
double c_st_prime_direct(const ExplicitTree& t1, const ExplicitTree& t2, double lambda,
                         double beta);

// Full sum over both graphs' DAGs, nodes and depth pairs in 0..h of
// c_cst_direct on the enumerated visits. Refuses to enumerate more than
// max_nodes tree nodes in total (default one million).
double kernel_brute_force(const AttributedGraph& g1, const AttributedGraph& g2, int h,
                          double lambda, double beta, std::size_t max_nodes = 1'000'000);

} // namespace odd
