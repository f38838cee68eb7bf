#include <algorithm>
#include <sstream>

#include "locdom/construct.hpp"
#include "locdom/errors.hpp"

namespace locdom {

const std::vector<std::string>& construct_rule_ids() {
    static const std::vector<std::string> ids{
        "T8-small",
        "T8-F1-small", "T8-F1", "T8-F2-small", "T8-F2",
        "T8-F3prime", "T8-F3-n6", "T8-F3-n7", "T8-F3-n8", "T8-F3",
        "T8-F4-small", "T8-F4", "T8-F5-small", "T8-F5",
        "T8-F6-small", "T8-F6-joined", "T8-F6-split", "T8-F6-split-K3",
        "T8-F6-twin-joined", "T8-F6-twin-split", "T8-F6-twin-K3",
        "T7-closed2",
        "T7-closed3-z-leaf", "T7-closed3-deg2", "T7-closed3-p2", "T7-closed3-support", "T7-closed3-leaf",
        "P6-1.1.1", "P6-1.1.2-n6", "P6-1.1.2-n7", "P6-1.1.2",
        "P6-1.2.1", "P6-1.2.2", "P6-1.2.3.1", "P6-1.2.3.2", "P6-1.2.3.3a", "P6-1.2.3.3b",
        "P2BoxC4",
        "P6-1.3.2a", "P6-1.3.2b", "P6-1.3.3.1", "P6-1.3.3.2a", "P6-1.3.3.2b", "P6-1.3.3.2c",
        "P6-2.1.1", "P6-2.1.2a", "P6-2.1.2b",
        "P6-2.2-prism", "P6-2.2.1", "P6-2.2.2a", "P6-2.2.2b",
        "P6-C4free",
        "FALLBACK-unclassified",
    };
    return ids;
}

bool is_construct_rule(std::string_view id) {
    const auto& ids = construct_rule_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_fallback_rule(std::string_view id) { return id == "P6-C4free" || id == "FALLBACK-unclassified"; }

namespace {

[[noreturn]] void mismatch(std::size_t index, const std::string& what) {
    throw Error(ErrorCode::BadParameter, "trace step " + std::to_string(index) + ": " + what);
}

VertexSet replay_step(const Graph& g, const std::vector<CaseStep>& trace, std::size_t& index) {
    if (index >= trace.size()) mismatch(index, "trace ended early");
    const std::size_t here = index++;
    const CaseStep& step = trace[here];
    if (!is_construct_rule(step.rule_id)) mismatch(here, "unknown rule " + step.rule_id);
    if (step.order != g.order() || step.size != g.edge_count())
        mismatch(here, "graph has n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()));
    if (step.patch_added.universe() != g.order() || step.patch_removed.universe() != g.order())
        mismatch(here, "patch universe does not match");
    if (step.is_leaf()) {
        if (!step.sub_sizes.empty()) mismatch(here, "leaf step with sub-solutions");
        return step.patch_added;
    }
    for (auto [u, v] : step.removed_edges)
        if (!g.has_edge(u, v)) mismatch(here, "removed edge is absent");
    for (int v : step.removed_vertices)
        if (v < 0 || v >= g.order()) mismatch(here, "removed vertex out of range");
    Graph reduced = remove_edges(g, step.removed_edges);
    auto [rest, map] = remove_vertices(reduced, VertexSet::from_vector(g.order(), step.removed_vertices));
    auto comps = components(rest);
    if (comps.size() != step.sub_sizes.size()) mismatch(here, "component count differs");
    VertexSet merged(g.order());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto [h, inner] = induced_subgraph(rest, comps[i]);
        VertexSet s = replay_step(h, trace, index);
        if (h.order() != step.sub_sizes[i].first || s.size() != step.sub_sizes[i].second)
            mismatch(here, "sub-solution size differs");
        merged |= map.lift(inner.lift(normalize_child(h, s)));
    }
    return (merged - step.patch_removed) | step.patch_added;
}

}  // namespace

VertexSet replay_certificate(const Graph& g, const LdCertificate& cert) {
    std::size_t index = 0;
    VertexSet s = replay_step(g, cert.trace, index);
    if (index != cert.trace.size()) mismatch(index, "unused trailing steps");
    return s;
}

std::string format_trace(const LdCertificate& cert) {
    std::ostringstream os;
    for (const auto& s : cert.trace) {
        os << std::string(2 * s.depth, ' ') << s.rule_id << " n=" << s.order << " m=" << s.size;
        if (!s.removed_edges.empty()) {
            os << " -E{";
            for (std::size_t i = 0; i < s.removed_edges.size(); ++i)
                os << (i ? "," : "") << s.removed_edges[i].first << "-" << s.removed_edges[i].second;
            os << "}";
        }
        if (!s.removed_vertices.empty()) {
            os << " -V{";
            for (std::size_t i = 0; i < s.removed_vertices.size(); ++i)
                os << (i ? "," : "") << s.removed_vertices[i];
            os << "}";
        }
        if (!s.patch_removed.empty()) os << " out" << s.patch_removed.to_string();
        if (!s.patch_added.empty()) os << " in" << s.patch_added.to_string();
        for (auto [n, k] : s.sub_sizes) os << " sub(" << n << "," << k << ")";
        os << " |S|=" << s.witness_size << "\n";
    }
    return os.str();
}

}  // namespace locdom
