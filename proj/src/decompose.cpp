#include "odd/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace odd {

DecompositionDag build_decomposition_dag(const AttributedGraph& g, int root, int h) {
    if (root < 0 || root >= g.num_nodes())
        throw std::invalid_argument("root out of range");
    if (h < 0)
        throw std::invalid_argument("h must be >= 0");

    DecompositionDag dag;
    dag.graph = &g;
    dag.root = root;

    std::vector<int> dag_index(g.num_nodes(), -1);
    dag.node.push_back(root);
    dag.depth.push_back(0);
    dag_index[root] = 0;

    // plain BFS; the frontier is a slice of dag.node
    for (int u = 0; u < static_cast<int>(dag.node.size()); u++) {
        if (dag.depth[u] >= h)
            continue;
        for (int w : g.neighbors(dag.node[u])) {
            if (dag_index[w] == -1) {
                dag_index[w] = static_cast<int>(dag.node.size());
                dag.node.push_back(w);
                dag.depth.push_back(dag.depth[u] + 1);
            }
        }
    }

    dag.children.resize(dag.size());
    dag.parent_count.assign(dag.size(), 0);
    for (int u = 0; u < dag.size(); u++) {
        if (dag.depth[u] >= h)
            continue;
        for (int w : g.neighbors(dag.node[u])) {
            int wi = dag_index[w];
            if (dag.depth[wi] == dag.depth[u] + 1) {
                dag.children[u].push_back(wi);
                dag.parent_count[wi]++;
            }
        }
    }
    return dag;
}

void order_dag(DecompositionDag& dag) {
    dag.pi_code.assign(dag.size(), HashCode{});
    // reverse BFS order == reverse topological order
    for (int v = dag.size() - 1; v >= 0; v--) {
        if (dag.is_leaf(v)) {
            dag.pi_code[v] = symbol_code(dag.label(v));
            continue;
        }
        auto& ch = dag.children[v];
        std::stable_sort(ch.begin(), ch.end(), [&](int a, int b) {
            return dag.pi_code[a] < dag.pi_code[b];
        });
        canonical::InternalBytes bytes(symbol_code(dag.label(v)));
        for (int c : ch)
            bytes.add_child(dag.pi_code[c]);
        dag.pi_code[v] = bytes.code();
    }
}

Decomposition decompose_graph(const AttributedGraph& g, int h) {
    Decomposition out;
    out.dags.reserve(g.num_nodes());
    std::size_t total_size = 0;
    for (int root = 0; root < g.num_nodes(); root++) {
        DecompositionDag dag = build_decomposition_dag(g, root, h);
        order_dag(dag);
        total_size += dag.size();
        out.stats.max_dag_size = std::max(out.stats.max_dag_size, dag.size());
        for (int v = 0; v < dag.size(); v++) {
            out.stats.rho = std::max(out.stats.rho, static_cast<int>(dag.children[v].size()));
            out.stats.dag_edges += dag.children[v].size();
        }
        out.dags.push_back(std::move(dag));
    }
    if (!out.dags.empty())
        out.stats.avg_dag_size = double(total_size) / double(out.dags.size());
    return out;
}

} // namespace odd
