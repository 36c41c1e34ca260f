#pragma once

#include <cstdint>
#include <vector>

#include "dcnet/fenwick.hpp"
#include "dcnet/graph.hpp"
#include "dcnet/rng.hpp"

namespace dcnet {

// Closed-form values for the growth-deletion model: per unit time r nodes
// arrive, each wiring c edges to existing nodes chosen proportionally to
// degree, and one node chosen uniformly at random is deleted.
double theoretical_mean_degree(int r, int c); // 2rc/(1+r), valid for r >= 1
double theoretical_gamma(int r);              // (3r-1)/(r-1), valid for r >= 2
double theoretical_alpha(int r);              // 2/(r+1),     valid for r >= 2

struct TheoryValues {
    double gamma;
    double alpha;
    double mean_degree;
};

struct SimParams {
    int r = 3;                  // nodes added per step, >= 2
    int c = 2;                  // edges per new node, >= 1
    std::int64_t steps = 20000;
    std::int64_t burn_in = -1;  // -1: steps/4
    std::uint64_t seed = 1;
    int init_size = -1;         // -1: max(c+1, 5); seed clique size

    std::int64_t effective_burn_in() const { return burn_in >= 0 ? burn_in : steps / 4; }
    int effective_init_size() const { return init_size >= 0 ? init_size : (c + 1 > 5 ? c + 1 : 5); }

    // Throws std::invalid_argument when out of the supported regime.
    void validate() const;
};

// Draws `count` distinct nodes, the first proportionally to degree and each
// subsequent draw renormalized over the remaining nodes. Throws when fewer
// than `count` nodes have degree >= 1.
std::vector<NodeId> sample_targets(const DynamicGraph& g, int count, Rng& rng);

// One simulation in progress. Keeps a degree-weight index and the deletable
// node list in lockstep with the graph; all mutation goes through step().
class SimState {
public:
    explicit SimState(const SimParams& params);

    // Adds r nodes (each wired to c distinct targets), then deletes one node
    // chosen uniformly among all nodes. Neighbors isolated by the deletion
    // stay in the graph with degree 0; each such event is counted in
    // isolation_events() as the cascade diagnostic.
    void step();

    const DynamicGraph& graph() const { return graph_; }
    std::int64_t step_count() const { return step_count_; }
    std::int64_t isolation_events() const { return isolation_events_; }

private:
    std::vector<NodeId> draw_targets(int count);

    SimParams params_;
    DynamicGraph graph_;
    Rng rng_;
    FenwickTree weights_;                         // slot = NodeId (dense, never reused)
    std::vector<NodeId> alive_;                   // uniform-deletion pool
    EdgeLabel next_label_ = 0;
    std::int64_t step_count_ = 0;
    std::int64_t isolation_events_ = 0;
};

struct SimResult {
    DegreeHistogram histogram;             // final state, degree-0 nodes included
    TheoryValues theory;
    std::vector<double> mean_degree_trace; // <k> after each step
    double post_burn_in_mean_degree = 0.0; // time average over steps > burn_in
    std::int64_t isolation_events = 0;
    std::int64_t final_nodes = 0;
    std::int64_t final_edges = 0;
};

SimResult run(const SimParams& params);

} // namespace dcnet
