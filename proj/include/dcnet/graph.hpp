#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace dcnet {

// Graph-assigned node identifier. Dense, sequential, never reused within one
// graph instance (deleted ids stay retired so event logs stay unambiguous).
using NodeId = std::int64_t;

// Identifies the loan (ledger mode) or arrival event (simulation mode) that
// created an edge. All edges created by one loan carry that loan's label.
using EdgeLabel = std::int64_t;

struct DegreeHistogram {
    std::map<std::int64_t, std::int64_t> counts; // degree k -> node count n_k
    std::int64_t n = 0;                          // total nodes
};

// Undirected multigraph of debtor-creditor relationships. Parallel edges
// between the same pair are kept distinct as long as their labels differ, so
// a loan's expiry deletes exactly that loan's edges. No self-loops.
//
// Single-writer: one logical thread mutates an instance; snapshots taken
// from it are plain values and may be shared freely.
class DynamicGraph {
public:
    struct EdgeRef {
        NodeId neighbor;
        EdgeLabel label;
    };

    NodeId add_node();

    // Adds an undirected edge. Throws on self-loops and unknown endpoints.
    void add_edge(NodeId u, NodeId v, EdgeLabel label);

    // Removes every edge carrying `label`, then removes every endpoint whose
    // degree reached zero. Unknown labels are a no-op. Returns the removed
    // nodes in first-touched order.
    std::vector<NodeId> remove_loan(EdgeLabel label);

    // Removes `v` and its incident edges. Neighbors are left in place even
    // if their degree drops to zero; cascade policy belongs to the caller.
    void remove_node(NodeId v);

    bool has_node(NodeId v) const { return adjacency_.count(v) != 0; }
    std::int64_t degree(NodeId v) const;
    const std::vector<EdgeRef>& neighbors(NodeId v) const;

    std::int64_t node_count() const { return static_cast<std::int64_t>(adjacency_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    NodeId next_node_id() const { return next_id_; }

    DegreeHistogram degree_histogram() const;

    // 2m/n. Throws on the empty graph.
    double average_degree() const;

    // Sorted node ids (deterministic iteration for callers that need it).
    std::vector<NodeId> nodes() const;

    // Sorted (u, v, label) triples with u < v; parallel edges repeat.
    std::vector<std::tuple<NodeId, NodeId, EdgeLabel>> edges() const;

private:
    void erase_edge_instance(NodeId from, NodeId to, EdgeLabel label);
    void erase_label_pair(EdgeLabel label, NodeId a, NodeId b);

    std::unordered_map<NodeId, std::vector<EdgeRef>> adjacency_;
    std::unordered_map<EdgeLabel, std::vector<std::pair<NodeId, NodeId>>> label_index_;
    NodeId next_id_ = 0;
    std::int64_t edge_count_ = 0;
};

} // namespace dcnet
