#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/solver.hpp"

namespace locdom {

struct EnumFilter {
    int order = 0;
    int max_degree = 3;
    std::optional<int> regular_degree;  // keep only d-regular graphs
    bool twin_free_only = false;
    bool hypotheses_only = false;  // keep only graphs meeting the half-order hypotheses
};

// All connected graphs of the given order and maximum degree, up to
// isomorphism, each in canonical labelling and sorted by canonical form.
// Built level by level: every connected graph on n vertices arises from one on
// n-1 vertices by adding a vertex joined to vertices of spare degree.
std::vector<Graph> enumerate_graphs(const EnumFilter& filter);

// Same, for every order up to the filter's order (inclusive), starting at 1.
std::vector<Graph> enumerate_graphs_up_to(const EnumFilter& filter);

struct SweepRecord {
    std::string graph6;
    int order = 0;
    int size = 0;
    std::string twin_class;  // "twin-free", "open", "closed" or "open+closed"
    std::vector<int> open_twin_degrees;
    bool hypotheses_hold = false;
    int gamma = 0;
    VertexSet witness;
    bool tight = false;       // gamma == n/2
    bool violation = false;   // hypotheses hold but gamma > floor(n/2)
};

struct SweepReport {
    EnumFilter filter;
    std::vector<SweepRecord> records;
    int graphs = 0;
    int exempt = 0;  // graphs outside the hypotheses
    int tight = 0;
    int violations = 0;
    double max_ratio = 0.0;  // over graphs meeting the hypotheses
    std::vector<std::string> tight_graphs;
    std::vector<std::string> violation_graphs;
};

// Solves every enumerated graph exactly and checks the half-order bound.
// Results are independent of the thread count (0 picks LOCDOM_THREADS or 1).
SweepReport sweep_conjecture(const EnumFilter& filter, int threads = 0,
                             const SolverBudget& budget = {});

// Same checks over a caller-supplied list (for example a graph6 stream from an
// external generator); records keep the input order.
SweepReport sweep_graphs(const std::vector<Graph>& graphs, int threads = 0,
                         const SolverBudget& budget = {});

int default_thread_count();

}  // namespace locdom
