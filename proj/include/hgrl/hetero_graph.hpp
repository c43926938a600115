#pragma once

#include "hgrl/schema.hpp"
#include "hgrl/types.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hgrl {

// Immutable after load; concurrent reads are safe.
struct HeteroGraph {
    Schema schema;
    int node_count = 0;
    std::vector<int> node_type_of;          // phi
    std::vector<Edge> edges;                // directed, as given in the file
    Matrix features;                        // node_count x d
    std::map<NodeId, int> labels;           // target-type nodes only
    std::vector<std::string> external_ids;  // internal id -> file id

    NodeId internal_id(const std::string& external) const;  // -1 if unknown

    void validate() const;
};

struct DenseAdjacency {
    Matrix matrix;
    std::vector<NodeId> node_index;
};

HeteroGraph load_graph(const std::filesystem::path& node_file,
                       const std::filesystem::path& edge_file,
                       const std::filesystem::path& label_file,
                       const Schema& schema);

// Writes nodes.tsv / edges.tsv / labels.tsv / schema.json into dir;
// load_graph on the result reproduces the graph exactly.
void save_graph(const HeteroGraph& graph, const std::filesystem::path& dir);

// Undirected de-duplicated neighbor union over all relations, ascending ids.
std::vector<NodeId> neighbors(const HeteroGraph& graph, NodeId node);

// Ahat = D^{-1/2} (A + I) D^{-1/2} on the induced undirected, unweighted
// subgraph over node_subset. Self-loops exist only here, never in the data.
DenseAdjacency normalized_adjacency(const HeteroGraph& graph,
                                    const std::vector<NodeId>& node_subset);

// Shared core for any symmetric edge set given per-subset local indices.
DenseAdjacency normalized_adjacency_from_edges(
    const std::vector<std::pair<int, int>>& undirected_local_edges, int n,
    const std::vector<NodeId>& node_index);

// Precomputed sorted adjacency lists for walk and GNN views.
class AdjacencyIndex {
public:
    explicit AdjacencyIndex(const HeteroGraph& graph);

    const std::vector<NodeId>& neighbors_of(NodeId node) const { return lists_[node]; }
    bool connected(NodeId u, NodeId v) const;
    int size() const { return static_cast<int>(lists_.size()); }

    // Symmetrized simple degree (neighbor count), for negative sampling.
    std::vector<double> degree_table() const;

private:
    std::vector<std::vector<NodeId>> lists_;
};

}  // namespace hgrl
