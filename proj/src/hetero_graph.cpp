#include "hgrl/hetero_graph.hpp"

#include "hgrl/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hgrl {

namespace {

std::runtime_error line_error(const std::filesystem::path& file, int line_no, const std::string& what) {
    return std::runtime_error(file.filename().string() + ":" + std::to_string(line_no) + ": " + what);
}

// Iterates non-empty lines, reporting 1-based line numbers.
template <typename Fn>
void for_each_line(const std::filesystem::path& file, Fn&& fn) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open file: " + file.string());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(line, line_no);
    }
}

}  // namespace

NodeId HeteroGraph::internal_id(const std::string& external) const {
    for (std::size_t i = 0; i < external_ids.size(); ++i)
        if (external_ids[i] == external) return static_cast<NodeId>(i);
    return -1;
}

void HeteroGraph::validate() const {
    schema.validate();
    if (static_cast<int>(node_type_of.size()) != node_count)
        throw std::runtime_error("graph: node type map size mismatch");
    if (features.rows() != node_count)
        throw std::runtime_error("graph: feature row count does not match node count");
    if (node_count > 0 && features.cols() <= 0)
        throw std::runtime_error("graph: feature dimension must be positive");
    const int n_rel = static_cast<int>(schema.relations.size());
    for (const auto& e : edges) {
        if (e.src < 0 || e.src >= node_count || e.dst < 0 || e.dst >= node_count)
            throw std::runtime_error("graph: unknown node id in edge");
        if (e.relation < 0 || e.relation >= n_rel)
            throw std::runtime_error("graph: unknown relation id in edge");
        const auto& rel = schema.relations[e.relation];
        if (node_type_of[e.src] != rel.src_type || node_type_of[e.dst] != rel.dst_type)
            throw std::runtime_error("graph: edge endpoints do not match relation '" + rel.name + "'");
    }
    for (const auto& [node, cls] : labels) {
        if (node < 0 || node >= node_count) throw std::runtime_error("graph: label on unknown node id");
        if (node_type_of[node] != schema.target_type)
            throw std::runtime_error("graph: label on non-target type");
        if (cls < 0) throw std::runtime_error("graph: negative class id");
    }
}

HeteroGraph load_graph(const std::filesystem::path& node_file,
                       const std::filesystem::path& edge_file,
                       const std::filesystem::path& label_file,
                       const Schema& schema) {
    schema.validate();
    HeteroGraph g;
    g.schema = schema;

    // Pass 1: nodes. Ids are arbitrary strings, re-indexed densely in file order.
    std::map<std::string, NodeId> id_map;
    std::vector<std::vector<double>> feature_rows;
    Eigen::Index dim = -1;
    for_each_line(node_file, [&](const std::string& line, int line_no) {
        auto fields = split(line, '\t');
        if (fields.size() < 2 || fields.size() > 3)
            throw line_error(node_file, line_no, "malformed node line (want id<TAB>type[<TAB>features])");
        if (id_map.count(fields[0]))
            throw line_error(node_file, line_no, "duplicate node id '" + fields[0] + "'");
        int type = schema.node_type_id(fields[1]);
        if (type < 0) throw line_error(node_file, line_no, "unknown node type '" + fields[1] + "'");
        NodeId id = static_cast<NodeId>(g.external_ids.size());
        id_map.emplace(fields[0], id);
        g.external_ids.push_back(fields[0]);
        g.node_type_of.push_back(type);

        std::vector<double> row;
        if (fields.size() == 3 && !fields[2].empty()) {
            for (const auto& cell : split(fields[2], ',')) {
                try {
                    std::size_t used = 0;
                    row.push_back(std::stod(cell, &used));
                    if (used != cell.size()) throw std::invalid_argument(cell);
                } catch (const std::exception&) {
                    throw line_error(node_file, line_no, "bad feature value '" + cell + "'");
                }
            }
            if (dim < 0) dim = static_cast<Eigen::Index>(row.size());
            else if (dim != static_cast<Eigen::Index>(row.size()))
                throw line_error(node_file, line_no, "feature dimension mismatch");
        } else {
            log_warn(node_file.filename().string() + ":" + std::to_string(line_no) +
                     ": node '" + fields[0] + "' has no features, zero-filling");
        }
        feature_rows.push_back(std::move(row));
    });
    g.node_count = static_cast<int>(g.external_ids.size());
    if (dim < 0) dim = 1;  // all rows missing: fall back to a 1-d zero feature
    g.features = Matrix::Zero(g.node_count, dim);
    for (int i = 0; i < g.node_count; ++i) {
        if (feature_rows[i].empty()) continue;
        for (Eigen::Index j = 0; j < dim; ++j) g.features(i, j) = feature_rows[i][j];
    }

    // Pass 2: edges.
    for_each_line(edge_file, [&](const std::string& line, int line_no) {
        auto fields = split(line, '\t');
        if (fields.size() != 3)
            throw line_error(edge_file, line_no, "malformed edge line (want src<TAB>dst<TAB>relation)");
        auto src = id_map.find(fields[0]);
        if (src == id_map.end()) throw line_error(edge_file, line_no, "unknown node id '" + fields[0] + "'");
        auto dst = id_map.find(fields[1]);
        if (dst == id_map.end()) throw line_error(edge_file, line_no, "unknown node id '" + fields[1] + "'");
        int rel = schema.relation_id(fields[2]);
        if (rel < 0) throw line_error(edge_file, line_no, "unknown relation '" + fields[2] + "'");
        g.edges.push_back({src->second, dst->second, rel});
    });

    // Pass 3: labels (target-type nodes only).
    for_each_line(label_file, [&](const std::string& line, int line_no) {
        auto fields = split(line, '\t');
        if (fields.size() != 2)
            throw line_error(label_file, line_no, "malformed label line (want id<TAB>class)");
        auto it = id_map.find(fields[0]);
        if (it == id_map.end()) throw line_error(label_file, line_no, "unknown node id '" + fields[0] + "'");
        if (g.node_type_of[it->second] != schema.target_type)
            throw line_error(label_file, line_no, "label on non-target type node '" + fields[0] + "'");
        int cls = 0;
        try {
            cls = std::stoi(fields[1]);
        } catch (const std::exception&) {
            throw line_error(label_file, line_no, "bad class id '" + fields[1] + "'");
        }
        if (cls < 0) throw line_error(label_file, line_no, "negative class id");
        g.labels[it->second] = cls;
    });

    g.validate();
    return g;
}

void save_graph(const HeteroGraph& graph, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::string nodes;
    for (int i = 0; i < graph.node_count; ++i) {
        nodes += graph.external_ids[i];
        nodes += '\t';
        nodes += graph.schema.node_types[graph.node_type_of[i]];
        nodes += '\t';
        nodes += join_csv(graph.features.row(i));
        nodes += '\n';
    }
    write_file(dir / "nodes.tsv", nodes);

    std::string edges;
    for (const auto& e : graph.edges) {
        edges += graph.external_ids[e.src];
        edges += '\t';
        edges += graph.external_ids[e.dst];
        edges += '\t';
        edges += graph.schema.relations[e.relation].name;
        edges += '\n';
    }
    write_file(dir / "edges.tsv", edges);

    std::string labels;
    for (const auto& [node, cls] : graph.labels)
        labels += graph.external_ids[node] + "\t" + std::to_string(cls) + "\n";
    write_file(dir / "labels.tsv", labels);

    save_schema(graph.schema, dir / "schema.json");
}

std::vector<NodeId> neighbors(const HeteroGraph& graph, NodeId node) {
    if (node < 0 || node >= graph.node_count) throw std::runtime_error("neighbors: invalid node id");
    std::vector<NodeId> out;
    for (const auto& e : graph.edges) {
        if (e.src == node && e.dst != node) out.push_back(e.dst);
        if (e.dst == node && e.src != node) out.push_back(e.src);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DenseAdjacency normalized_adjacency_from_edges(
    const std::vector<std::pair<int, int>>& undirected_local_edges, int n,
    const std::vector<NodeId>& node_index) {
    if (n <= 0) throw std::runtime_error("normalized_adjacency: empty node subset");
    Matrix a = Matrix::Identity(n, n);  // the +I term
    for (const auto& [u, v] : undirected_local_edges) {
        if (u == v) continue;
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Vector inv_sqrt_deg = a.rowwise().sum().array().sqrt().inverse();
    DenseAdjacency out;
    out.matrix = inv_sqrt_deg.asDiagonal() * a * inv_sqrt_deg.asDiagonal();
    out.node_index = node_index;
    return out;
}

DenseAdjacency normalized_adjacency(const HeteroGraph& graph,
                                    const std::vector<NodeId>& node_subset) {
    if (node_subset.empty()) throw std::runtime_error("normalized_adjacency: empty node subset");
    std::map<NodeId, int> local;
    for (std::size_t i = 0; i < node_subset.size(); ++i) {
        if (node_subset[i] < 0 || node_subset[i] >= graph.node_count)
            throw std::runtime_error("normalized_adjacency: invalid node id in subset");
        local.emplace(node_subset[i], static_cast<int>(i));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : graph.edges) {
        auto s = local.find(e.src);
        auto d = local.find(e.dst);
        if (s != local.end() && d != local.end()) edges.emplace_back(s->second, d->second);
    }
    return normalized_adjacency_from_edges(edges, static_cast<int>(node_subset.size()), node_subset);
}

AdjacencyIndex::AdjacencyIndex(const HeteroGraph& graph) : lists_(graph.node_count) {
    for (const auto& e : graph.edges) {
        if (e.src == e.dst) continue;
        lists_[e.src].push_back(e.dst);
        lists_[e.dst].push_back(e.src);
    }
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

bool AdjacencyIndex::connected(NodeId u, NodeId v) const {
    const auto& l = lists_[u];
    return std::binary_search(l.begin(), l.end(), v);
}

std::vector<double> AdjacencyIndex::degree_table() const {
    std::vector<double> deg(lists_.size());
    for (std::size_t i = 0; i < lists_.size(); ++i) deg[i] = static_cast<double>(lists_[i].size());
    return deg;
}

}  // namespace hgrl
