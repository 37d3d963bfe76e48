#include "odd/features.hpp"

#include <cstring>
#include <stdexcept>

#include "odd/numfmt.hpp"
#include "odd/vecops.hpp"

namespace odd {

VisitTable::VisitTable(const DecompositionDag& dag, int h) : h_(h) {
    if (h < 0)
        throw std::invalid_argument("h must be >= 0");
    if (dag.pi_code.empty() && dag.size() > 0)
        throw std::invalid_argument("visit table needs an ordered DAG");

    const int n = dag.size();
    codes_.resize(std::size_t(n) * (h + 1));
    sizes_.resize(std::size_t(n) * (h + 1));

    std::vector<HashCode> label_code(n);
    for (int v = 0; v < n; v++)
        label_code[v] = symbol_code(dag.label(v));

    // reverse BFS index order: children before parents
    for (int v = n - 1; v >= 0; v--) {
        codes_[idx(v, 0)] = label_code[v];
        sizes_[idx(v, 0)] = 1.0;
        if (dag.is_leaf(v)) {
            for (int j = 1; j <= h_; j++) {
                codes_[idx(v, j)] = label_code[v];
                sizes_[idx(v, j)] = 1.0;
            }
            continue;
        }
        for (int j = 1; j <= h_; j++) {
            canonical::InternalBytes bytes(label_code[v]);
            double size = 1.0;
            for (int c : dag.children[v]) {
                bytes.add_child(codes_[idx(c, j - 1)]);
                size += sizes_[idx(c, j - 1)];
            }
            codes_[idx(v, j)] = bytes.code();
            sizes_[idx(v, j)] = size;
        }
    }
}

std::string attr_key(std::span<const double> attrs) {
    std::string key(attrs.size() * sizeof(double), '\0');
    if (!attrs.empty())
        std::memcpy(key.data(), attrs.data(), key.size());
    return key;
}

void SizeMap::insert(const HashCode& code, double size) {
    auto [it, fresh] = sizes_.emplace(code, size);
    if (!fresh && it->second != size)
        throw std::runtime_error("code " + to_hex(code) + " maps to two tree sizes (" +
                                 format_double(it->second) + " and " + format_double(size) +
                                 "): hash collision");
}

double SizeMap::at(const HashCode& code) const {
    auto it = sizes_.find(code);
    if (it == sizes_.end())
        throw std::out_of_range("unknown code " + to_hex(code));
    return it->second;
}

std::pair<FeatureMap, SizeMap> compute_feature_map(const AttributedGraph& g, int h) {
    FeatureMap fm;
    SizeMap sm;
    std::vector<std::string> keys(g.num_nodes());
    for (int v = 0; v < g.num_nodes(); v++)
        keys[v] = attr_key(g.attributes(v));

    Decomposition dec = decompose_graph(g, h);
    for (const auto& dag : dec.dags) {
        VisitTable table(dag, h);
        for (int v = 0; v < dag.size(); v++) {
            const std::string& key = keys[dag.node[v]];
            for (int j = 0; j <= h; j++) {
                const HashCode& code = table.code(v, j);
                fm.entries[code][key]++;
                fm.total_insertions++;
                sm.insert(code, table.size(v, j));
            }
        }
    }
    return {std::move(fm), std::move(sm)};
}

std::pair<RffFeatureMap, SizeMap> compute_feature_map_rff(const AttributedGraph& g, int h,
                                                          const RffProjection& proj) {
    if (g.attribute_dim() != proj.input_dim())
        throw std::invalid_argument("projection dimension " + std::to_string(proj.input_dim()) +
                                    " does not match attribute dimension " +
                                    std::to_string(g.attribute_dim()));

    // Collect exact bags first, then fold phi in canonical (code, key) order
    // so node numbering cannot leak into the floating-point accumulation.
    auto [fm, sm] = compute_feature_map(g, h);

    std::map<std::string, std::vector<double>> phi_of; // one phi per distinct attr
    for (int v = 0; v < g.num_nodes(); v++) {
        std::string key = attr_key(g.attributes(v));
        if (!phi_of.contains(key))
            phi_of.emplace(std::move(key), proj.features(g.attributes(v)));
    }

    RffFeatureMap out;
    out.dim = proj.dim();
    for (const auto& [code, bag] : fm.entries) {
        std::vector<double> acc(proj.dim(), 0.0);
        for (const auto& [key, freq] : bag)
            vecops::axpy(double(freq), phi_of.at(key).data(), acc.data(), proj.dim());
        out.entries.emplace(code, std::move(acc));
    }
    return {std::move(out), std::move(sm)};
}

std::string dump_feature_map(const FeatureMap& fm, const SizeMap& sm) {
    std::string out;
    for (const auto& [code, bag] : fm.entries) {
        const std::string hex = to_hex(code);
        const std::string size = format_double(sm.at(code));
        for (const auto& [key, freq] : bag) {
            out += hex;
            out += '\t';
            out += size;
            out += '\t';
            out += std::to_string(freq);
            out += '\t';
            const std::size_t d = key.size() / sizeof(double);
            for (std::size_t k = 0; k < d; k++) {
                double x;
                std::memcpy(&x, key.data() + k * sizeof(double), sizeof(double));
                if (k)
                    out += ',';
                out += format_double(x);
            }
            out += '\n';
        }
    }
    return out;
}

} // namespace odd
