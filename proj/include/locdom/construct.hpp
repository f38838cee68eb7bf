#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom {

// One reduction in the recursive construction, recorded in pre-order. The
// reduced graph is (G - removed_edges) - removed_vertices in the labels of the
// graph this step acts on; each of its components (ordered by least vertex)
// is solved by the child subtree that follows, the child sets are normalized
// (leaves out when possible, supports in otherwise) and lifted, and the patch
// turns their union S' into (S' - patch_removed) | patch_added.
// A step without removals is a leaf whose witness is patch_added.
struct CaseStep {
    std::string rule_id;
    int depth = 0;
    int order = 0;  // n of the graph at this step
    int size = 0;   // m of the graph at this step
    std::vector<Edge> removed_edges;
    std::vector<int> removed_vertices;
    VertexSet patch_removed;
    VertexSet patch_added;
    std::vector<std::pair<int, int>> sub_sizes;  // (n', |S'|) per component
    int witness_size = 0;

    bool is_leaf() const { return removed_edges.empty() && removed_vertices.empty(); }
};

struct LdCertificate {
    VertexSet witness;
    std::vector<CaseStep> trace;
    int fallback_count = 0;  // exact solves standing in for a reduction

    // Rule id of every step that counted as a fallback.
    std::vector<std::string> fallback_rules() const;
};

struct ConstructOptions {
    // Graphs with at most this many edges, or at most small_order vertices,
    // are solved exactly as base cases.
    int small_edges = 6;
    int small_order = 4;
    bool memoize = true;
};

// LD-set of size at most floor(n/2) for a connected subcubic graph with n >= 2,
// no open twins of degree 1 or 2, other than K3, K4 and K3,3. Throws
// HypothesisViolated naming the failing hypothesis.
LdCertificate construct_half_ld(const Graph& g, const ConstructOptions& options = {});

// Same for connected cubic graphs other than K4 and K3,3.
LdCertificate construct_for_cubic(const Graph& g, const ConstructOptions& options = {});

// Recomputes the witness from the recorded steps alone. Throws Error
// (BadParameter) when the trace does not fit the graph.
VertexSet replay_certificate(const Graph& g, const LdCertificate& cert);

// Normalization applied to every child set during construction and replay.
VertexSet normalize_child(const Graph& g, const VertexSet& s);

const std::vector<std::string>& construct_rule_ids();
bool is_construct_rule(std::string_view id);
// Rules that stand for an exact solve in place of a reduction.
bool is_fallback_rule(std::string_view id);

// Indented one-line-per-step rendering of a trace.
std::string format_trace(const LdCertificate& cert);

}  // namespace locdom
