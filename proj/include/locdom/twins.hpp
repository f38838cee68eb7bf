#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "locdom/errors.hpp"
#include "locdom/graph.hpp"

namespace locdom {

struct TwinPair {
    int u = -1;
    int v = -1;
    int degree = 0;
    friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

// Open twins share N(.), closed twins share N[.]. Pairs are listed with u < v
// in lexicographic order.
struct TwinReport {
    std::vector<TwinPair> open;
    std::vector<TwinPair> closed;
    bool twin_free() const { return open.empty() && closed.empty(); }
};

TwinReport twin_report(const Graph& g);
std::vector<TwinPair> open_twins_of_degree(const Graph& g, int d);
std::vector<TwinPair> closed_twins_of_degree(const Graph& g, int d);
bool has_open_twins(const Graph& g);
bool is_twin_free(const Graph& g);

struct LeafSupport {
    std::vector<int> leaves;
    std::vector<int> supports;
    std::vector<int> support_of;  // per vertex: its support if it is a leaf, else -1
};

// A leaf has degree 1; a support is adjacent to a leaf.
LeafSupport leaves_and_supports(const Graph& g);

using Triangle = std::array<int, 3>;
using FourCycle = std::array<int, 4>;

// Triangles as sorted triples.
std::vector<Triangle> triangles(const Graph& g);
// Four-cycles (a, b, c, d) with edges ab, bc, cd, da, a the minimum vertex
// and b < d. Chords are allowed.
std::vector<FourCycle> four_cycles(const Graph& g);

struct StructureLemmaReport {
    bool triangle_free = true;
    // For triangle-free graphs: two vertices of a four-cycle have no common
    // neighbour off the cycle. Trivially true when triangles exist.
    bool c4_common_neighbours = true;
    // No two triangles share an edge.
    bool triangles_edge_disjoint = true;
    // Every four-cycle is induced.
    bool four_cycles_induced = true;
    std::vector<std::string> violations;

    bool all_hold() const {
        return c4_common_neighbours && triangles_edge_disjoint && four_cycles_induced;
    }
};

// Checks the structural facts that hold in every subcubic twin-free graph.
// Throws HypothesisViolated when the graph is not subcubic and twin-free.
StructureLemmaReport check_structure_lemmas(const Graph& g);

// Hypotheses of the half-order bound: connected, order >= 2, maximum degree
// at most 3, no open twins of degree 1 or 2, and not K3, K4 or K3,3.
// Returns the first hypothesis that fails.
std::optional<HypothesisViolated> bound_hypotheses_violation(const Graph& g);
bool satisfies_bound_hypotheses(const Graph& g);
// Same test applied to a single connected graph, ignoring connectivity.
bool is_excluded_small_graph(const Graph& g);

}  // namespace locdom
