#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "odd/decompose.hpp"
#include "synthetic.hpp"

using namespace odd;

namespace {

AttributedGraph labeled(std::vector<std::string> labels,
                        std::vector<std::pair<int, int>> edges) {
    std::vector<NodeRecord> nodes;
    for (auto& l : labels)
        nodes.push_back(NodeRecord{intern(l), {}});
    return AttributedGraph::build(std::move(nodes), edges);
}

// all-pairs shortest path lengths by repeated squaring-free Floyd-Warshall
std::vector<std::vector<int>> all_distances(const AttributedGraph& g) {
    const int n = g.num_nodes();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; v++) {
        d[v][v] = 0;
        for (int w : g.neighbors(v))
            d[v][w] = 1;
    }
    for (int k = 0; k < n; k++)
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

} // namespace

TEST_SUITE_BEGIN("decompose");

TEST_CASE("path graph from an end node") {
    // a - b - c, rooted at a with h = 2: a chain
    auto g = labeled({"a", "b", "c"}, {{0, 1}, {1, 2}});
    auto dag = build_decomposition_dag(g, 0, 2);
    REQUIRE(dag.size() == 3);
    CHECK(dag.node == std::vector<int>{0, 1, 2});
    CHECK(dag.depth == std::vector<int>{0, 1, 2});
    CHECK(dag.children[0] == std::vector<int>{1});
    CHECK(dag.children[1] == std::vector<int>{2});
    CHECK(dag.is_leaf(2));
    CHECK(dag.parent_count == std::vector<int>{0, 1, 1});

    SUBCASE("truncation at h = 1 stops the walk") {
        auto cut = build_decomposition_dag(g, 0, 1);
        CHECK(cut.size() == 2);
        CHECK(cut.depth == std::vector<int>{0, 1});
        CHECK(cut.is_leaf(1));
    }
    SUBCASE("h = 0 keeps only the root") {
        auto cut = build_decomposition_dag(g, 1, 0);
        CHECK(cut.size() == 1);
        CHECK(cut.node[0] == 1);
        CHECK(cut.is_leaf(0));
    }
}

TEST_CASE("star center vs star tip") {
    auto g = labeled({"c", "t", "t", "t"}, {{0, 1}, {0, 2}, {0, 3}});
    auto center = build_decomposition_dag(g, 0, 3);
    CHECK(center.size() == 4);
    CHECK(center.children[0].size() == 3);
    for (int v = 1; v < 4; v++)
        CHECK(center.is_leaf(v));

    auto tip = build_decomposition_dag(g, 1, 3);
    REQUIRE(tip.size() == 4);
    CHECK(tip.depth == std::vector<int>{0, 1, 2, 2});
    CHECK(tip.children[1].size() == 2); // center fans back out to both other tips
}

TEST_CASE("triangle: same-depth edges are dropped") {
    auto g = labeled({"c", "c", "c"}, {{0, 1}, {0, 2}, {1, 2}});
    auto dag = build_decomposition_dag(g, 0, 2);
    REQUIRE(dag.size() == 3);
    CHECK(dag.depth == std::vector<int>{0, 1, 1});
    // the (1, 2) edge joins two depth-1 nodes and must not appear
    CHECK(dag.children[0].size() == 2);
    CHECK(dag.is_leaf(1));
    CHECK(dag.is_leaf(2));
    CHECK(dag.parent_count == std::vector<int>{0, 1, 1});
}

TEST_CASE("diamond: multi-parent node appears once") {
    // square a-b, a-c, b-d, c-d rooted at a: d has two shortest paths
    auto g = labeled({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto dag = build_decomposition_dag(g, 0, 2);
    REQUIRE(dag.size() == 4);
    CHECK(dag.depth == std::vector<int>{0, 1, 1, 2});
    CHECK(dag.parent_count == std::vector<int>{0, 1, 1, 2});
    CHECK(dag.children[1] == std::vector<int>{3});
    CHECK(dag.children[2] == std::vector<int>{3});
}

TEST_CASE("depths equal true shortest-path distance, truncated") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; trial++) {
        auto g = oddtest::random_graph(rng, 10, 18, 3, 0, trial);
        auto dist = all_distances(g);
        for (int h : {0, 1, 2, 5}) {
            for (int root = 0; root < g.num_nodes(); root++) {
                auto dag = build_decomposition_dag(g, root, h);
                std::vector<int> seen(g.num_nodes(), -1);
                for (int v = 0; v < dag.size(); v++) {
                    CHECK(seen[dag.node[v]] == -1); // each graph node at most once
                    seen[dag.node[v]] = dag.depth[v];
                    CHECK(dag.depth[v] == dist[root][dag.node[v]]);
                    CHECK(dag.depth[v] <= h);
                    for (int c : dag.children[v])
                        CHECK(dag.depth[c] == dag.depth[v] + 1);
                }
                // everything within distance h is reached
                for (int w = 0; w < g.num_nodes(); w++)
                    if (dist[root][w] <= h)
                        CHECK(seen[w] == dist[root][w]);
                    else
                        CHECK(seen[w] == -1);
            }
        }
    }
}

TEST_CASE("ordering sorts children by code and is idempotent") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 20; trial++) {
        auto g = oddtest::random_graph(rng, 9, 14, 3, 0, trial);
        for (int root = 0; root < g.num_nodes(); root++) {
            auto dag = build_decomposition_dag(g, root, 3);
            order_dag(dag);
            REQUIRE(int(dag.pi_code.size()) == dag.size());
            for (int v = 0; v < dag.size(); v++) {
                const auto& ch = dag.children[v];
                for (std::size_t i = 1; i < ch.size(); i++) {
                    const auto& prev = dag.pi_code[ch[i - 1]];
                    const auto& cur = dag.pi_code[ch[i]];
                    bool sorted = prev < cur ||
                                  (prev == cur && dag.node[ch[i - 1]] < dag.node[ch[i]]);
                    CHECK(sorted);
                }
            }
            auto again = dag;
            order_dag(again);
            CHECK(again.children == dag.children);
            for (int v = 0; v < dag.size(); v++)
                CHECK(again.pi_code[v] == dag.pi_code[v]);
        }
    }
}

TEST_CASE("codes identify the rooted subtree shape") {
    // two different graphs whose roots unfold to the same tree get one code
    auto p3 = labeled({"a", "b", "a"}, {{0, 1}, {1, 2}});
    auto star = labeled({"b", "a", "a"}, {{0, 1}, {0, 2}});
    auto from_middle = build_decomposition_dag(p3, 1, 1);
    auto from_center = build_decomposition_dag(star, 0, 1);
    order_dag(from_middle);
    order_dag(from_center);
    CHECK(from_middle.pi_code[0] == from_center.pi_code[0]);

    // label changes the code
    auto star2 = labeled({"b", "a", "c"}, {{0, 1}, {0, 2}});
    auto d2 = build_decomposition_dag(star2, 0, 1);
    order_dag(d2);
    CHECK_FALSE(d2.pi_code[0] == from_center.pi_code[0]);
}

TEST_CASE("whole-graph decomposition and its stats") {
    auto g = labeled({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto dec = decompose_graph(g, 2);
    REQUIRE(dec.dags.size() == 4);
    for (int r = 0; r < 4; r++)
        CHECK(dec.dags[r].root == r);
    CHECK(dec.stats.max_dag_size == 4); // diamond reaches everything
    CHECK(dec.stats.avg_dag_size == doctest::Approx(4.0));
    CHECK(dec.stats.rho == 2);
    // DAG edges: every root sees the 4-cycle minus its same-depth pair = 4 edges
    CHECK(dec.stats.dag_edges == 16);
    CHECK(dec.stats.dag_edges <= std::size_t(g.num_nodes()) * g.num_edges());
}

TEST_CASE("dag edge totals stay within n * m") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 15; trial++) {
        auto g = oddtest::random_graph(rng, 12, 24, 2, 0, trial);
        for (int h : {1, 3, 6}) {
            auto dec = decompose_graph(g, h);
            CHECK(dec.stats.dag_edges <= std::size_t(g.num_nodes()) * g.num_edges());
            CHECK(dec.stats.max_dag_size <= g.num_nodes());
        }
    }
}

TEST_SUITE_END();
