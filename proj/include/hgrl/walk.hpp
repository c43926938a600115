#pragma once

#include "hgrl/hetero_graph.hpp"
#include "hgrl/rng.hpp"
#include "hgrl/types.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <vector>

namespace hgrl {

// prev sentinel for the first step of a walk (uniform over neighbors).
inline constexpr NodeId kWalkStart = -1;

struct WalkConfig {
    double p = 1.0;                  // return parameter
    double q = 1.0;                  // in-out parameter
    int walk_length = 80;            // nodes per walk
    int walks_per_node = 10;
    int window = 5;                  // skip-gram context window
    int negatives_per_positive = 5;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Walk {
    std::vector<NodeId> nodes;
};

struct ContextPair {
    NodeId center;
    NodeId context;
};

// Second-order transition kernel: unnormalized weight 1/p if the candidate is
// the previous node, 1 if it neighbors the previous node, 1/q otherwise.
// Returned probabilities sum to 1; empty when curr has no neighbors.
std::vector<std::pair<NodeId, double>> transition_weights(const AdjacencyIndex& adj,
                                                          NodeId prev, NodeId curr,
                                                          double p, double q);
std::vector<std::pair<NodeId, double>> transition_weights(const HeteroGraph& graph,
                                                          NodeId prev, NodeId curr,
                                                          double p, double q);

// One biased step; -1 at a dead end.
NodeId sample_step(const AdjacencyIndex& adj, NodeId prev, NodeId curr,
                   double p, double q, Rng& rng);

Walk sample_walk(const AdjacencyIndex& adj, NodeId start, const WalkConfig& config, Rng& rng);

// walks_per_node walks from every node, ordered by (start, walk index); each
// walk draws from its own sub-stream so the set is seed-deterministic.
std::vector<Walk> generate_walks(const HeteroGraph& graph, const WalkConfig& config);

// Keeps a walk iff all its training-labeled nodes carry one class. Unlabeled
// and held-out nodes never disqualify a walk.
std::vector<Walk> retain_labeled_walks(const std::vector<Walk>& walks,
                                       const std::map<NodeId, int>& labels,
                                       const std::set<NodeId>& training_ids);

// Ordered (center, context) pairs within the window, center != context.
std::vector<ContextPair> context_pairs(const Walk& walk, int window);

// count draws with replacement, probability proportional to degree^0.75,
// center excluded.
std::vector<NodeId> sample_negatives(NodeId center, int count,
                                     const std::vector<double>& degree_table, Rng& rng);

void dump_walks(const std::vector<Walk>& walks, const HeteroGraph& graph,
                const std::filesystem::path& file);

}  // namespace hgrl
