#pragma once

// Generators for the test corpora: small uniform random graphs for oracle
// comparisons, node-id permutations for invariance checks, and a
// template-plus-rewiring family (a labeled circulant ring with chords) whose
// repetitive local structure gives the kernels realistic shared-code load.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "odd/dataset.hpp"
#include "odd/graph.hpp"

namespace oddtest {

inline std::vector<double> random_attrs(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(dim);
    for (double& x : a)
        x = u(rng);
    return a;
}

// connected-ish uniform graph: n in 1..n_max, up to m_max distinct edges
inline odd::AttributedGraph random_graph(std::mt19937_64& rng, int n_max, int m_max,
                                         int num_labels, int dim, int graph_id = 0) {
    std::uniform_int_distribution<int> nd(1, n_max);
    const int n = nd(rng);
    std::uniform_int_distribution<int> ld(0, num_labels - 1);
    std::vector<odd::NodeRecord> nodes;
    nodes.reserve(n);
    for (int v = 0; v < n; v++)
        nodes.push_back(odd::NodeRecord{odd::intern(std::string(1, char('a' + ld(rng)))),
                                        random_attrs(rng, dim)});
    std::vector<std::pair<int, int>> edges;
    if (n > 1) {
        std::uniform_int_distribution<int> md(0, m_max);
        std::uniform_int_distribution<int> vd(0, n - 1);
        const int m = md(rng);
        for (int e = 0; e < m; e++)
            edges.emplace_back(vd(rng), vd(rng)); // dups/self-loops cleaned by build
    }
    return odd::AttributedGraph::build(std::move(nodes), edges, graph_id);
}

// same graph under new node ids: node v of g becomes perm[v]
inline odd::AttributedGraph permute_graph(const odd::AttributedGraph& g,
                                          const std::vector<int>& perm) {
    std::vector<odd::NodeRecord> nodes(g.num_nodes());
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.num_nodes(); v++) {
        nodes[perm[v]] = odd::NodeRecord{g.label(v),
                                         {g.attributes(v).begin(), g.attributes(v).end()}};
        for (int w : g.neighbors(v))
            if (v < w)
                edges.emplace_back(perm[v], perm[w]);
    }
    return odd::AttributedGraph::build(std::move(nodes), edges, g.graph_id(), g.class_label());
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// one fixed shape shared by the whole family: a 28-node ring with antipodal
// chords (3-regular, vertex-transitive), every node labeled "a", plus a
// pendant "b"-"c" edge. 30 nodes, 43 edges, three label symbols. Only the
// attributes vary, so any two family members share all structural codes and
// each shared code carries the full 28-node attribute bag.
inline odd::AttributedGraph shared_shape_graph(std::mt19937_64& rng, int dim, int graph_id = 0) {
    const int ring = 28;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < ring; v++)
        edges.emplace_back(v, (v + 1) % ring);
    for (int v = 0; v < ring / 2; v++)
        edges.emplace_back(v, v + ring / 2);
    edges.emplace_back(ring, ring + 1);

    std::vector<odd::NodeRecord> nodes;
    nodes.reserve(ring + 2);
    for (int v = 0; v < ring; v++)
        nodes.push_back(odd::NodeRecord{odd::intern("a"), random_attrs(rng, dim)});
    nodes.push_back(odd::NodeRecord{odd::intern("b"), random_attrs(rng, dim)});
    nodes.push_back(odd::NodeRecord{odd::intern("c"), random_attrs(rng, dim)});
    return odd::AttributedGraph::build(std::move(nodes), edges, graph_id);
}

inline odd::Dataset make_dataset(std::vector<odd::AttributedGraph> graphs, std::string name,
                                 bool has_classes = false) {
    odd::Dataset ds;
    ds.name = std::move(name);
    ds.attribute_dim = graphs.empty() ? 0 : graphs.front().attribute_dim();
    ds.has_node_labels = true;
    ds.has_class_labels = has_classes;
    ds.graphs = std::move(graphs);
    return ds;
}

// attribute-only variations of the shared shape
inline odd::Dataset shared_shape_family(std::mt19937_64& rng, int count, int dim,
                                        const std::string& name) {
    std::vector<odd::AttributedGraph> graphs;
    graphs.reserve(count);
    for (int i = 0; i < count; i++)
        graphs.push_back(shared_shape_graph(rng, dim, i + 1));
    return make_dataset(std::move(graphs), name);
}

} // namespace oddtest
