#include "dcnet/simulate.hpp"

#include <stdexcept>
#include <string>

namespace dcnet {

double theoretical_mean_degree(int r, int c) {
    if (r < 1 || c < 1)
        throw std::invalid_argument("theoretical_mean_degree: need r >= 1 and c >= 1");
    return 2.0 * r * c / (1.0 + r);
}

double theoretical_gamma(int r) {
    if (r < 2)
        throw std::invalid_argument("theoretical_gamma: defined for r >= 2");
    return (3.0 * r - 1.0) / (r - 1.0);
}

double theoretical_alpha(int r) {
    if (r < 2)
        throw std::invalid_argument("theoretical_alpha: defined for r >= 2");
    return 2.0 / (r + 1.0);
}

void SimParams::validate() const {
    if (r < 2) throw std::invalid_argument("SimParams: r must be >= 2 (r=1 keeps the network size constant)");
    if (c < 1) throw std::invalid_argument("SimParams: c must be >= 1");
    if (steps < 0) throw std::invalid_argument("SimParams: steps must be >= 0");
    if (steps > 0 && effective_burn_in() >= steps)
        throw std::invalid_argument("SimParams: burn_in must be < steps");
    if (effective_init_size() < c + 1)
        throw std::invalid_argument("SimParams: init_size must be >= c+1 so a new node finds c distinct targets");
}

namespace {

// Weighted draw of `count` distinct slots from `weights`; selected weights are
// zeroed during the draw and restored afterwards.
std::vector<std::size_t> draw_distinct(FenwickTree& weights, int count, Rng& rng) {
    std::vector<std::size_t> chosen;
    std::vector<std::uint64_t> stashed;
    chosen.reserve(static_cast<std::size_t>(count));
    stashed.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::uint64_t w = weights.total();
        if (w == 0) {
            for (std::size_t j = 0; j < chosen.size(); ++j)
                weights.add(chosen[j], static_cast<std::int64_t>(stashed[j]));
            throw std::runtime_error("sample_targets: fewer eligible nodes than requested");
        }
        std::size_t slot = weights.search(rng.below(w));
        std::uint64_t sw = weights.weight(slot);
        chosen.push_back(slot);
        stashed.push_back(sw);
        weights.add(slot, -static_cast<std::int64_t>(sw));
    }
    for (std::size_t j = 0; j < chosen.size(); ++j)
        weights.add(chosen[j], static_cast<std::int64_t>(stashed[j]));
    return chosen;
}

} // namespace

std::vector<NodeId> sample_targets(const DynamicGraph& g, int count, Rng& rng) {
    if (count < 0) throw std::invalid_argument("sample_targets: negative count");
    std::vector<NodeId> ids = g.nodes();
    FenwickTree weights;
    int eligible = 0;
    for (NodeId v : ids) {
        std::int64_t d = g.degree(v);
        if (d > 0) ++eligible;
        weights.append(static_cast<std::uint64_t>(d));
    }
    if (eligible < count)
        throw std::runtime_error("sample_targets: only " + std::to_string(eligible) +
                                 " nodes with degree >= 1, need " + std::to_string(count));
    std::vector<std::size_t> slots = draw_distinct(weights, count, rng);
    std::vector<NodeId> out;
    out.reserve(slots.size());
    for (std::size_t s : slots) out.push_back(ids[s]);
    return out;
}

SimState::SimState(const SimParams& params) : params_(params), rng_(params.seed) {
    params_.validate();
    int n0 = params_.effective_init_size();
    for (int i = 0; i < n0; ++i) {
        NodeId v = graph_.add_node();
        weights_.append(0);
        alive_.push_back(v);
    }
    for (int i = 0; i < n0; ++i) {
        for (int j = i + 1; j < n0; ++j) {
            graph_.add_edge(i, j, next_label_++);
            weights_.add(static_cast<std::size_t>(i), 1);
            weights_.add(static_cast<std::size_t>(j), 1);
        }
    }
}

std::vector<NodeId> SimState::draw_targets(int count) {
    std::vector<std::size_t> slots = draw_distinct(weights_, count, rng_);
    return {slots.begin(), slots.end()};
}

void SimState::step() {
    // (a) r arrivals, each wired to c distinct existing targets. A node just
    // added has degree 0 and thus zero weight, so it can never draw itself;
    // earlier arrivals of the same step are legitimate targets.
    for (int i = 0; i < params_.r; ++i) {
        NodeId v = graph_.add_node();
        while (weights_.size() <= static_cast<std::size_t>(v)) weights_.append(0);
        alive_.push_back(v);
        std::vector<NodeId> targets = draw_targets(params_.c);
        EdgeLabel label = next_label_++;
        for (NodeId t : targets) {
            graph_.add_edge(v, t, label);
            weights_.add(static_cast<std::size_t>(v), 1);
            weights_.add(static_cast<std::size_t>(t), 1);
        }
    }

    // (b) one uniform deletion over all nodes, isolates included. Neighbors
    // that drop to degree 0 remain; the model's balance equations have no
    // outflow for them beyond later uniform deletion.
    std::size_t pick = static_cast<std::size_t>(rng_.below(alive_.size()));
    NodeId victim = alive_[pick];
    std::vector<DynamicGraph::EdgeRef> incident = graph_.neighbors(victim);
    weights_.add(static_cast<std::size_t>(victim),
                 -static_cast<std::int64_t>(incident.size()));
    graph_.remove_node(victim);
    for (const auto& e : incident) {
        weights_.add(static_cast<std::size_t>(e.neighbor), -1);
        if (graph_.degree(e.neighbor) == 0) ++isolation_events_;
    }
    alive_[pick] = alive_.back();
    alive_.pop_back();

    ++step_count_;
}

SimResult run(const SimParams& params) {
    SimParams p = params;
    p.validate();
    SimState state(p);

    SimResult result;
    result.theory = {theoretical_gamma(p.r), theoretical_alpha(p.r),
                     theoretical_mean_degree(p.r, p.c)};
    result.mean_degree_trace.reserve(static_cast<std::size_t>(p.steps));

    std::int64_t burn = p.effective_burn_in();
    double acc = 0.0;
    std::int64_t acc_n = 0;
    for (std::int64_t t = 0; t < p.steps; ++t) {
        state.step();
        double mean = state.graph().average_degree();
        result.mean_degree_trace.push_back(mean);
        if (t >= burn) {
            acc += mean;
            ++acc_n;
        }
    }
    result.post_burn_in_mean_degree = acc_n > 0 ? acc / static_cast<double>(acc_n) : 0.0;
    result.histogram = state.graph().degree_histogram();
    result.isolation_events = state.isolation_events();
    result.final_nodes = state.graph().node_count();
    result.final_edges = state.graph().edge_count();
    return result;
}

} // namespace dcnet
