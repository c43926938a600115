#include "hgrl/smooth_graph.hpp"

#include "hgrl/io.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hgrl {

std::vector<std::vector<int>> SmoothGraph::neighbor_lists() const {
    std::vector<std::vector<int>> lists(nodes.size());
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        lists[u].push_back(v);
        lists[v].push_back(u);
    }
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return lists;
}

std::vector<int> neighbors(const SmoothGraph& graph, int node) {
    if (node < 0 || node >= graph.size()) throw std::runtime_error("neighbors: invalid node id");
    return graph.neighbor_lists()[node];
}

std::pair<std::vector<int>, std::vector<std::pair<int, int>>> one_hop_subgraph(
    const SmoothGraph& graph, int center) {
    if (center < 0 || center >= graph.size())
        throw std::runtime_error("one_hop_subgraph: invalid node id");
    auto lists = graph.neighbor_lists();
    std::vector<int> nodes;
    nodes.push_back(center);
    for (int v : lists[center]) nodes.push_back(v);

    std::map<int, int> local;
    for (std::size_t i = 0; i < nodes.size(); ++i) local.emplace(nodes[i], static_cast<int>(i));

    // Induced edges, each undirected pair once (u < v in local order).
    std::vector<std::pair<int, int>> sub_edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int v : lists[nodes[i]]) {
            auto it = local.find(v);
            if (it == local.end()) continue;
            int a = static_cast<int>(i), b = it->second;
            if (a < b) sub_edges.emplace_back(a, b);
        }
    }
    return {std::move(nodes), std::move(sub_edges)};
}

DenseAdjacency normalized_adjacency(const SmoothGraph& graph,
                                    const std::vector<int>& node_subset) {
    if (node_subset.empty()) throw std::runtime_error("normalized_adjacency: empty node subset");
    std::map<int, int> local;
    for (std::size_t i = 0; i < node_subset.size(); ++i) {
        if (node_subset[i] < 0 || node_subset[i] >= graph.size())
            throw std::runtime_error("normalized_adjacency: invalid node id in subset");
        local.emplace(node_subset[i], static_cast<int>(i));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges) {
        auto s = local.find(u);
        auto d = local.find(v);
        if (s != local.end() && d != local.end()) edges.emplace_back(s->second, d->second);
    }
    std::vector<NodeId> index(node_subset.begin(), node_subset.end());
    return normalized_adjacency_from_edges(edges, static_cast<int>(node_subset.size()), index);
}

void save_smooth_graph(const SmoothGraph& graph, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::string edges;
    for (const auto& [u, v] : graph.edges)
        edges += graph.external_ids[u] + "\t" + graph.external_ids[v] + "\n";
    write_file(dir / "edges.tsv", edges);

    std::string feats;
    for (int i = 0; i < graph.size(); ++i)
        feats += graph.external_ids[i] + "\t" + join_csv(graph.features.row(i)) + "\n";
    write_file(dir / "features.tsv", feats);
}

SmoothGraph load_smooth_graph(const std::filesystem::path& dir) {
    SmoothGraph g;
    std::map<std::string, int> id_map;
    std::vector<std::vector<double>> rows;

    for (const auto& line : split(read_file(dir / "features.tsv"), '\n')) {
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() != 2) throw std::runtime_error("features.tsv: malformed line");
        id_map.emplace(fields[0], static_cast<int>(g.external_ids.size()));
        g.external_ids.push_back(fields[0]);
        g.nodes.push_back(static_cast<NodeId>(rows.size()));
        std::vector<double> row;
        for (const auto& cell : split(fields[1], ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("features.tsv: no nodes");
    g.features = Matrix::Zero(static_cast<Eigen::Index>(rows.size()),
                              static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::runtime_error("features.tsv: dimension mismatch");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            g.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }

    for (const auto& line : split(read_file(dir / "edges.tsv"), '\n')) {
        if (line.empty()) continue;
        auto fields = split(line, '\t');
        if (fields.size() != 2) throw std::runtime_error("edges.tsv: malformed line");
        auto u = id_map.find(fields[0]);
        auto v = id_map.find(fields[1]);
        if (u == id_map.end() || v == id_map.end())
            throw std::runtime_error("edges.tsv: unknown node id");
        g.edges.emplace_back(u->second, v->second);
    }
    return g;
}

HeteroGraph to_hetero(const SmoothGraph& graph) {
    HeteroGraph h;
    h.schema.node_types = {"N"};
    h.schema.relations = {{"NN", 0, 0}};
    h.schema.target_type = 0;
    h.schema.allow_homogeneous = true;
    h.node_count = graph.size();
    h.node_type_of.assign(graph.size(), 0);
    h.features = graph.features;
    h.external_ids = graph.external_ids;
    for (const auto& [u, v] : graph.edges) h.edges.push_back({u, v, 0});
    return h;
}

}  // namespace hgrl
