#include "odd/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "odd/numfmt.hpp"

namespace odd {
namespace {

namespace fs = std::filesystem;

[[noreturn]] void fail(const fs::path& file, std::size_t line, const std::string& what) {
    throw std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what);
}

// Lines with '\r' stripped; trailing all-blank lines dropped.
std::vector<std::string> read_lines(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + file.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty())
        lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_csv(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace

Dataset parse_tu_dataset(const fs::path& dir, const std::string& name) {
    const fs::path indicator_file = dir / (name + "_graph_indicator.txt");
    const fs::path edges_file = dir / (name + "_A.txt");
    const fs::path labels_file = dir / (name + "_node_labels.txt");
    const fs::path attrs_file = dir / (name + "_node_attributes.txt");
    const fs::path classes_file = dir / (name + "_graph_labels.txt");

    for (const fs::path* required : {&indicator_file, &edges_file})
        if (!fs::exists(*required))
            throw std::runtime_error("missing dataset file: " + required->string());

    // node -> graph map; graphs are 1..N in the indicator
    const auto indicator_lines = read_lines(indicator_file);
    const std::size_t total_nodes = indicator_lines.size();
    std::vector<int> graph_of(total_nodes);
    int num_graphs = 0;
    for (std::size_t i = 0; i < total_nodes; i++) {
        long long gid;
        try {
            gid = parse_int_token(indicator_lines[i]);
        } catch (const std::exception& e) {
            fail(indicator_file, i + 1, e.what());
        }
        if (gid < 1)
            fail(indicator_file, i + 1, "graph id must be >= 1");
        graph_of[i] = static_cast<int>(gid - 1);
        num_graphs = std::max(num_graphs, static_cast<int>(gid));
    }

    std::vector<Symbol> labels(total_nodes);
    bool has_node_labels = fs::exists(labels_file);
    if (has_node_labels) {
        const auto lines = read_lines(labels_file);
        if (lines.size() != total_nodes)
            fail(labels_file, lines.size(),
                 "expected " + std::to_string(total_nodes) + " node label lines, found " +
                     std::to_string(lines.size()));
        for (std::size_t i = 0; i < total_nodes; i++) {
            auto tok = trim(lines[i]);
            if (tok.empty())
                fail(labels_file, i + 1, "empty node label");
            labels[i] = intern(tok);
        }
    }

    int attribute_dim = 0;
    std::vector<std::vector<double>> attrs(total_nodes);
    if (fs::exists(attrs_file)) {
        const auto lines = read_lines(attrs_file);
        if (lines.size() != total_nodes)
            fail(attrs_file, lines.size(),
                 "expected " + std::to_string(total_nodes) + " attribute lines, found " +
                     std::to_string(lines.size()));
        for (std::size_t i = 0; i < total_nodes; i++) {
            auto fields = split_csv(lines[i]);
            auto& row = attrs[i];
            row.reserve(fields.size());
            for (auto f : fields) {
                try {
                    row.push_back(parse_double_token(f));
                } catch (const std::exception& e) {
                    fail(attrs_file, i + 1, e.what());
                }
            }
            if (i == 0)
                attribute_dim = static_cast<int>(row.size());
            else if (static_cast<int>(row.size()) != attribute_dim)
                fail(attrs_file, i + 1,
                     "attribute width " + std::to_string(row.size()) + " differs from " +
                         std::to_string(attribute_dim));
        }
    }

    std::vector<std::optional<int>> class_labels(num_graphs);
    bool has_class_labels = fs::exists(classes_file);
    if (has_class_labels) {
        const auto lines = read_lines(classes_file);
        if (static_cast<int>(lines.size()) != num_graphs)
            fail(classes_file, lines.size(),
                 "expected " + std::to_string(num_graphs) + " graph label lines, found " +
                     std::to_string(lines.size()));
        for (int gi = 0; gi < num_graphs; gi++) {
            try {
                class_labels[gi] = static_cast<int>(parse_int_token(lines[gi]));
            } catch (const std::exception& e) {
                fail(classes_file, gi + 1, e.what());
            }
        }
    }

    // global node id -> (graph, local id), locals in global order
    std::vector<int> local_of(total_nodes);
    std::vector<std::vector<int>> members(num_graphs);
    for (std::size_t i = 0; i < total_nodes; i++) {
        local_of[i] = static_cast<int>(members[graph_of[i]].size());
        members[graph_of[i]].push_back(static_cast<int>(i));
    }

    std::vector<std::vector<std::pair<int, int>>> edges(num_graphs);
    const auto edge_lines = read_lines(edges_file);
    for (std::size_t li = 0; li < edge_lines.size(); li++) {
        auto line = trim(edge_lines[li]);
        if (line.empty())
            continue;
        auto fields = split_csv(line);
        if (fields.size() != 2)
            fail(edges_file, li + 1, "expected 'i, j'");
        long long a, b;
        try {
            a = parse_int_token(fields[0]);
            b = parse_int_token(fields[1]);
        } catch (const std::exception& e) {
            fail(edges_file, li + 1, e.what());
        }
        if (a < 1 || b < 1 || a > static_cast<long long>(total_nodes) ||
            b > static_cast<long long>(total_nodes))
            fail(edges_file, li + 1, "node id out of range");
        int ga = graph_of[a - 1], gb = graph_of[b - 1];
        if (ga != gb)
            fail(edges_file, li + 1, "edge joins two different graphs");
        edges[ga].emplace_back(local_of[a - 1], local_of[b - 1]);
    }

    Dataset ds;
    ds.name = name;
    ds.attribute_dim = attribute_dim;
    ds.has_node_labels = has_node_labels;
    ds.has_class_labels = has_class_labels;
    ds.graphs.reserve(num_graphs);
    for (int gi = 0; gi < num_graphs; gi++) {
        std::vector<NodeRecord> nodes;
        nodes.reserve(members[gi].size());
        for (int global : members[gi])
            nodes.push_back(NodeRecord{has_node_labels ? labels[global] : Symbol{0},
                                       std::move(attrs[global])});
        AttributedGraph g = AttributedGraph::build(std::move(nodes), edges[gi], gi + 1,
                                                   class_labels[gi]);
        if (!has_node_labels)
            g = degree_as_labels(g);
        ds.graphs.push_back(std::move(g));
    }
    return ds;
}

Dataset relabel_by_degree(const Dataset& ds) {
    Dataset out;
    out.name = ds.name;
    out.attribute_dim = ds.attribute_dim;
    out.has_node_labels = false;
    out.has_class_labels = ds.has_class_labels;
    out.graphs.reserve(ds.graphs.size());
    for (const auto& g : ds.graphs)
        out.graphs.push_back(degree_as_labels(g));
    return out;
}

DatasetStats dataset_stats(const Dataset& ds) {
    DatasetStats st;
    st.num_graphs = static_cast<int>(ds.graphs.size());
    st.attribute_dim = ds.attribute_dim;
    std::size_t nodes = 0, edges = 0;
    std::map<int, int> classes;
    for (const auto& g : ds.graphs) {
        nodes += g.num_nodes();
        edges += g.num_edges();
        if (g.class_label())
            classes[*g.class_label()]++;
        for (int v = 0; v < g.num_nodes(); v++)
            st.max_outdegree = std::max(st.max_outdegree, g.degree(v));
    }
    if (st.num_graphs > 0) {
        st.avg_nodes = double(nodes) / st.num_graphs;
        st.avg_edges = double(edges) / st.num_graphs;
    }
    st.num_classes = static_cast<int>(classes.size());
    return st;
}

void write_tu_dataset(const Dataset& ds, const fs::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ofstream a(dir / (ds.name + "_A.txt"), std::ios::binary);
    std::ofstream ind(dir / (ds.name + "_graph_indicator.txt"), std::ios::binary);
    std::ofstream lab(dir / (ds.name + "_node_labels.txt"), std::ios::binary);
    std::ofstream att;
    if (ds.attribute_dim > 0)
        att.open(dir / (ds.name + "_node_attributes.txt"), std::ios::binary);
    std::ofstream cls;
    if (ds.has_class_labels)
        cls.open(dir / (ds.name + "_graph_labels.txt"), std::ios::binary);

    std::size_t base = 0;
    int gid = 1;
    for (const auto& g : ds.graphs) {
        for (int v = 0; v < g.num_nodes(); v++) {
            ind << gid << "\n";
            lab << symbol_name(g.label(v)) << "\n";
            if (ds.attribute_dim > 0) {
                auto attrs = g.attributes(v);
                for (int k = 0; k < ds.attribute_dim; k++)
                    att << (k ? "," : "") << format_double(attrs[k]);
                att << "\n";
            }
            for (int w : g.neighbors(v))
                a << base + v + 1 << ", " << base + w + 1 << "\n";
        }
        if (ds.has_class_labels)
            cls << g.class_label().value_or(0) << "\n";
        base += g.num_nodes();
        gid++;
    }
    if (!a || !ind || !lab || (ds.attribute_dim > 0 && !att) || (ds.has_class_labels && !cls))
        throw std::runtime_error("failed writing dataset to " + dir.string());
}

} // namespace odd
