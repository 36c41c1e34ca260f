#include "dcnet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dcnet {

NodeId DynamicGraph::add_node() {
    NodeId id = next_id_++;
    adjacency_.emplace(id, std::vector<EdgeRef>{});
    return id;
}

void DynamicGraph::add_edge(NodeId u, NodeId v, EdgeLabel label) {
    if (u == v)
        throw std::invalid_argument("add_edge: self-loop on node " + std::to_string(u));
    auto iu = adjacency_.find(u);
    auto iv = adjacency_.find(v);
    if (iu == adjacency_.end())
        throw std::invalid_argument("add_edge: unknown node " + std::to_string(u));
    if (iv == adjacency_.end())
        throw std::invalid_argument("add_edge: unknown node " + std::to_string(v));
    iu->second.push_back({v, label});
    iv->second.push_back({u, label});
    label_index_[label].emplace_back(u, v);
    ++edge_count_;
}

void DynamicGraph::erase_edge_instance(NodeId from, NodeId to, EdgeLabel label) {
    auto& refs = adjacency_.at(from);
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (refs[i].neighbor == to && refs[i].label == label) {
            refs[i] = refs.back();
            refs.pop_back();
            return;
        }
    }
    throw std::logic_error("graph invariant broken: missing edge instance");
}

void DynamicGraph::erase_label_pair(EdgeLabel label, NodeId a, NodeId b) {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return;
    auto& pairs = it->second;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((pairs[i].first == a && pairs[i].second == b) ||
            (pairs[i].first == b && pairs[i].second == a)) {
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (pairs.empty()) label_index_.erase(it);
}

std::vector<NodeId> DynamicGraph::remove_loan(EdgeLabel label) {
    std::vector<NodeId> removed;
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return removed;

    std::vector<std::pair<NodeId, NodeId>> pairs = std::move(it->second);
    label_index_.erase(it);

    std::vector<NodeId> touched;
    for (const auto& [u, v] : pairs) {
        erase_edge_instance(u, v, label);
        erase_edge_instance(v, u, label);
        --edge_count_;
        touched.push_back(u);
        touched.push_back(v);
    }
    for (NodeId v : touched) {
        auto iv = adjacency_.find(v);
        if (iv != adjacency_.end() && iv->second.empty()) {
            adjacency_.erase(iv);
            removed.push_back(v);
        }
    }
    return removed;
}

void DynamicGraph::remove_node(NodeId v) {
    auto iv = adjacency_.find(v);
    if (iv == adjacency_.end())
        throw std::invalid_argument("remove_node: unknown node " + std::to_string(v));
    std::vector<EdgeRef> incident = std::move(iv->second);
    for (const EdgeRef& e : incident) {
        erase_edge_instance(e.neighbor, v, e.label);
        erase_label_pair(e.label, v, e.neighbor);
        --edge_count_;
    }
    adjacency_.erase(v);
}

std::int64_t DynamicGraph::degree(NodeId v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::invalid_argument("degree: unknown node " + std::to_string(v));
    return static_cast<std::int64_t>(it->second.size());
}

const std::vector<DynamicGraph::EdgeRef>& DynamicGraph::neighbors(NodeId v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::invalid_argument("neighbors: unknown node " + std::to_string(v));
    return it->second;
}

DegreeHistogram DynamicGraph::degree_histogram() const {
    DegreeHistogram h;
    h.n = node_count();
    for (const auto& [node, refs] : adjacency_)
        ++h.counts[static_cast<std::int64_t>(refs.size())];
    return h;
}

double DynamicGraph::average_degree() const {
    if (adjacency_.empty())
        throw std::domain_error("average_degree: empty graph");
    return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adjacency_.size());
}

std::vector<NodeId> DynamicGraph::nodes() const {
    std::vector<NodeId> out;
    out.reserve(adjacency_.size());
    for (const auto& [node, refs] : adjacency_) out.push_back(node);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::tuple<NodeId, NodeId, EdgeLabel>> DynamicGraph::edges() const {
    std::vector<std::tuple<NodeId, NodeId, EdgeLabel>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (const auto& [label, pairs] : label_index_)
        for (const auto& [u, v] : pairs)
            out.emplace_back(std::min(u, v), std::max(u, v), label);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dcnet
