#pragma once

#include "hgrl/hetero_graph.hpp"
#include "hgrl/types.hpp"

#include <filesystem>
#include <utility>
#include <vector>

namespace hgrl {

// The constructed k-nearest-neighbor graph over target nodes. Edges are the
// directed top-k picks; GNN consumers use the symmetrized view.
struct SmoothGraph {
    std::vector<NodeId> nodes;                 // original graph ids, ascending
    std::vector<std::string> external_ids;     // aligned with nodes
    std::vector<std::pair<int, int>> edges;    // directed (src, dst), local indices
    Matrix features;                           // one topology-embedding row per node

    int size() const { return static_cast<int>(nodes.size()); }

    // Symmetrized sorted neighbor lists (union of out- and in-edges).
    std::vector<std::vector<int>> neighbor_lists() const;
};

std::vector<int> neighbors(const SmoothGraph& graph, int node);

// (center followed by its sorted neighbors, induced symmetrized edge list in
// local indices of the returned node list).
std::pair<std::vector<int>, std::vector<std::pair<int, int>>> one_hop_subgraph(
    const SmoothGraph& graph, int center);

DenseAdjacency normalized_adjacency(const SmoothGraph& graph,
                                    const std::vector<int>& node_subset);

// edges.tsv (src, dst) + features.tsv; a 1-type, 1-relation graph on disk.
void save_smooth_graph(const SmoothGraph& graph, const std::filesystem::path& dir);
SmoothGraph load_smooth_graph(const std::filesystem::path& dir);

// The same data as a HeteroGraph (node type "N", relation "NN").
HeteroGraph to_hetero(const SmoothGraph& graph);

}  // namespace hgrl
