#include "odd/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "odd/node_kernel.hpp"

namespace odd {

std::size_t ExplicitTree::node_count() const {
    std::size_t n = 1;
    for (const auto& c : children)
        n += c.node_count();
    return n;
}

ExplicitTree enumerate_tree_visit(const DecompositionDag& dag, int v, int j) {
    if (v < 0 || v >= dag.size())
        throw std::invalid_argument("node out of range");
    if (j < 0)
        throw std::invalid_argument("depth must be >= 0");
    if (dag.pi_code.empty() && dag.size() > 0)
        throw std::invalid_argument("enumeration needs an ordered DAG");

    ExplicitTree t;
    t.label = dag.label(v);
    auto attrs = dag.graph->attributes(dag.node[v]);
    t.attributes.assign(attrs.begin(), attrs.end());
    if (j > 0)
        for (int c : dag.children[v])
            t.children.push_back(enumerate_tree_visit(dag, c, j - 1));
    return t;
}

double c_st_direct(const ExplicitTree& t1, const ExplicitTree& t2, double lambda) {
    if (t1.label != t2.label)
        return 0.0;
    if (t1.children.empty() && t2.children.empty())
        return lambda;
    if (t1.children.size() != t2.children.size())
        return 0.0;
    double prod = lambda;
    for (std::size_t i = 0; i < t1.children.size(); i++) {
        prod *= c_st_direct(t1.children[i], t2.children[i], lambda);
        if (prod == 0.0)
            return 0.0;
    }
    return prod;
}

double c_cst_direct(const ExplicitTree& t1, const ExplicitTree& t2, double lambda, double beta) {
    const double st = c_st_direct(t1, t2, lambda);
    if (st == 0.0)
        return 0.0;
    return gaussian_kernel(t1.attributes, t2.attributes, beta) * st;
}

double c_st_prime_direct(const ExplicitTree& t1, const ExplicitTree& t2, double lambda,
                         double beta) {
    if (t1.label != t2.label)
        return 0.0;
    const double g = gaussian_kernel(t1.attributes, t2.attributes, beta);
    if (t1.children.empty() && t2.children.empty())
        return lambda * g;
    if (t1.children.size() != t2.children.size())
        return 0.0;
    double prod = lambda * g;
    for (std::size_t i = 0; i < t1.children.size(); i++) {
        prod *= c_st_prime_direct(t1.children[i], t2.children[i], lambda, beta);
        if (prod == 0.0)
            return 0.0;
    }
    return prod;
}

namespace {

// all T_j(v) of one graph, j = 0..h
std::vector<ExplicitTree> enumerate_all_visits(const AttributedGraph& g, int h,
                                               std::size_t max_nodes, std::size_t& budget) {
    std::vector<ExplicitTree> visits;
    Decomposition dec = decompose_graph(g, h);
    for (const auto& dag : dec.dags) {
        for (int v = 0; v < dag.size(); v++) {
            for (int j = 0; j <= h; j++) {
                ExplicitTree t = enumerate_tree_visit(dag, v, j);
                budget += t.node_count();
                if (budget > max_nodes)
                    throw std::runtime_error(
                        "brute-force enumeration exceeds " + std::to_string(max_nodes) +
                        " tree nodes; graphs too large for the reference path");
                visits.push_back(std::move(t));
            }
        }
    }
    return visits;
}

} // namespace

double kernel_brute_force(const AttributedGraph& g1, const AttributedGraph& g2, int h,
                          double lambda, double beta, std::size_t max_nodes) {
    std::size_t budget = 0;
    const auto visits1 = enumerate_all_visits(g1, h, max_nodes, budget);
    const auto visits2 = enumerate_all_visits(g2, h, max_nodes, budget);
    double k = 0.0;
    for (const auto& t1 : visits1)
        for (const auto& t2 : visits2)
            k += c_cst_direct(t1, t2, lambda, beta);
    return k;
}

} // namespace odd
