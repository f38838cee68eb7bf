// Open-twin-free graphs with closed twins.

#include "engine_internal.hpp"
#include "locdom/twins.hpp"

namespace locdom::detail {

namespace {

Edge e(int u, int v) { return std::minmax(u, v); }

void degree_two_pair(const Graph& g, const TwinPair& p, std::vector<Attempt>& out) {
    for (int flip = 0; flip < 2; ++flip) {
        const int u = flip ? p.v : p.u, v = flip ? p.u : p.v;
        const int w = other_neighbour(g, u, {v});
        if (w < 0 || g.degree(w) != 3) continue;
        out.push_back(reduce_attempt(g, "T7-closed2", {e(v, w)}, {}));
    }
}

void degree_three_pair(const Graph& g, const TwinPair& p, std::vector<Attempt>& out) {
    for (int flip = 0; flip < 4; ++flip) {
        const int u = (flip & 1) ? p.v : p.u, v = (flip & 1) ? p.u : p.v;
        std::vector<int> common;
        for (int x : g.neighbours(u))
            if (x != v) common.push_back(x);
        if (common.size() != 2) continue;
        const int w = (flip & 2) ? common[1] : common[0];
        const int wp = (flip & 2) ? common[0] : common[1];
        if (g.has_edge(w, wp)) continue;
        const int z = other_neighbour(g, w, {u, v});
        if (z < 0) continue;
        if (g.degree(wp) == 2) {
            if (g.degree(z) == 1) {
                if (g.order() == 5) out.push_back(direct_attempt(g, "T7-closed3-z-leaf", {w, v}));
            } else {
                out.push_back(reduce_attempt(g, "T7-closed3-deg2", {}, {v, wp}, {v}));
            }
            continue;
        }
        const int zp = other_neighbour(g, wp, {u, v});
        if (zp < 0 || zp == z) continue;
        if (g.degree(z) == 1) {
            out.push_back(reduce_attempt(g, "T7-closed3-p2", {e(u, w), e(u, wp), e(v, w)}, {w, z}, {z}));
        } else if (!has_leaf(g, z)) {
            out.push_back(reduce_attempt(g, "T7-closed3-support", {e(u, w), e(u, wp), e(v, w)}, {}));
        } else {
            Attempt at = reduce_attempt(g, "T7-closed3-leaf", {e(u, w), e(v, wp)}, {});
            at.patches = [&g, v, w](const VertexSet& s) {
                std::vector<Patch> ps{make_patch(g, "T7-closed3-leaf", {}, {})};
                if (s.contains(w) && !s.contains(v)) ps.push_back(make_patch(g, "T7-closed3-leaf", {w}, {v}));
                return ps;
            };
            out.push_back(std::move(at));
        }
    }
}

}  // namespace

std::vector<Attempt> thm7_attempts(const Graph& g) {
    std::vector<Attempt> out;
    const auto closed = twin_report(g).closed;
    for (const auto& p : closed)
        if (p.degree == 2) degree_two_pair(g, p, out);
    for (const auto& p : closed)
        if (p.degree == 3) degree_three_pair(g, p, out);
    return out;
}

}  // namespace locdom::detail
