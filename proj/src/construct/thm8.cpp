// Graphs with open twins of degree 3: classification around an anchor pair
// u, v with common neighbours x, y, z.

#include <array>

#include "engine_internal.hpp"
#include "locdom/twins.hpp"

namespace locdom::detail {

namespace {

Edge e(int u, int v) { return std::minmax(u, v); }

bool has_degree_one_or_two_twins(const Graph& g) {
    for (const auto& p : twin_report(g).open)
        if (p.degree == 1 || p.degree == 2) return true;
    return false;
}

int component_of(const std::vector<VertexSet>& comps, int v) {
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        if (comps[i].contains(v)) return i;
    return -1;
}

bool is_triangle_component(const Graph& g, const VertexSet& comp) {
    if (comp.size() != 3) return false;
    auto vs = comp.to_vector();
    return g.has_edge(vs[0], vs[1]) && g.has_edge(vs[0], vs[2]) && g.has_edge(vs[1], vs[2]);
}

// Some common neighbour has degree 2: the x of the F1 / F2 situations.
void degree_two_common(const Graph& g, int u, int v, int x, int y, int z, std::vector<Attempt>& out) {
    if (g.has_edge(y, z)) {
        if (g.order() == 5) out.push_back(direct_attempt(g, "T8-F3prime", {v, z}));
        return;
    }
    const int yp = other_neighbour(g, y, {u, v});
    const int zp = other_neighbour(g, z, {u, v});
    if (yp < 0 || zp < 0) return;
    if (yp == zp) {
        const int w = yp;
        if (g.degree(w) == 2) {
            if (g.order() == 6) out.push_back(direct_attempt(g, "T8-F1-small", {u, z, w}));
            return;
        }
        Attempt at = reduce_attempt(g, "T8-F1", {e(u, x)}, {});
        at.patches = [&g, u, w](const VertexSet& s) {
            std::vector<Patch> ps{make_patch(g, "T8-F1", {}, {})};
            if (s.contains(u) && !s.contains(w)) ps.push_back(make_patch(g, "T8-F1", {u}, {w}));
            return ps;
        };
        out.push_back(std::move(at));
        return;
    }
    if (g.degree(yp) == 1 && g.degree(zp) == 1) {
        if (g.order() == 7) out.push_back(direct_attempt(g, "T8-F2-small", {v, y, z}));
        return;
    }
    Attempt at = reduce_attempt(g, "T8-F2", {e(u, x)}, {});
    at.patches = [&g, u, y, z](const VertexSet& s) {
        std::vector<Patch> ps{make_patch(g, "T8-F2", {}, {})};
        if (s.contains(u)) {
            if (!s.contains(z)) ps.push_back(make_patch(g, "T8-F2", {u}, {z}));
            if (!s.contains(y)) ps.push_back(make_patch(g, "T8-F2", {u}, {y}));
        }
        return ps;
    };
    out.push_back(std::move(at));
}

// y and z adjacent, all three of degree 3.
void f3_situation(const Graph& g, int u, int v, int x, int y, int z, std::vector<Attempt>& out) {
    const int xp = other_neighbour(g, x, {u, v});
    auto [rest, map] = remove_vertices(g, {u, v, x, y, z});
    const int ns = rest.order();
    if (ns == 1) {
        out.push_back(direct_attempt(g, "T8-F3-n6", {xp, v, z}));
        return;
    }
    if (ns == 2 && rest.edge_count() == 1) {
        out.push_back(direct_attempt(g, "T8-F3-n7", {xp, v, z}));
        return;
    }
    if (ns == 3 && rest.edge_count() == 2) {
        const int hx = map.to_new(xp);
        if (rest.degree(hx) == 1) {
            const int xpp = map.to_old(rest.neighbours(hx)[0]);
            out.push_back(direct_attempt(g, "T8-F3-n8", {xp, xpp, v, z}));
            return;
        }
    }
    out.push_back(reduce_attempt(g, "T8-F3", {e(u, x), e(u, z), e(y, z)}, {}));
}

// Common neighbours pairwise non-adjacent, y and z sharing their third neighbour w.
void f45_situation(const Graph& g, int u, int v, int x, int y, int z, int w, std::vector<Attempt>& out) {
    if (g.degree(w) != 3) return;  // an F1 situation around the pair y, z
    const int wp = other_neighbour(g, w, {y, z});
    const int xp = other_neighbour(g, x, {u, v});
    if (wp == x) return;
    if (xp != wp) {
        if (g.degree(wp) == 1 && g.degree(xp) == 1) {
            if (g.order() == 8) out.push_back(direct_attempt(g, "T8-F4-small", {v, w, x, y}));
            return;
        }
        out.push_back(reduce_attempt(g, "T8-F4", {e(u, x), e(u, y), e(w, y)}, {}));
        return;
    }
    if (g.degree(xp) == 2) {
        if (g.order() == 7) out.push_back(direct_attempt(g, "T8-F5-small", {v, xp, y}));
        return;
    }
    out.push_back(reduce_attempt(g, "T8-F5", {e(u, x), e(u, y), e(w, y)}, {}));
}

// Third neighbours x', y', z' distinct and outside the anchor; z' not a leaf.
void f6_situation(const Graph& g, int z, int zp, std::vector<Attempt>& out) {
    Graph cut = remove_edges(g, {e(z, zp)});
    if (!has_degree_one_or_two_twins(cut)) {
        auto comps = components(cut);
        if (component_of(comps, z) == component_of(comps, zp)) {
            out.push_back(reduce_attempt(g, "T8-F6-joined", {e(z, zp)}, {}));
            return;
        }
        const VertexSet& side = comps[component_of(comps, zp)];
        if (is_triangle_component(cut, side)) {
            std::vector<int> others;
            for (int q : side)
                if (q != zp) others.push_back(q);
            Attempt at = reduce_attempt(g, "T8-F6-split-K3", {}, {others[0], others[1]});
            const int q0 = others[0], q1 = others[1];
            at.patches = [&g, q0, q1](const VertexSet&) {
                return std::vector<Patch>{make_patch(g, "T8-F6-split-K3", {}, {q0}),
                                          make_patch(g, "T8-F6-split-K3", {}, {q1})};
            };
            out.push_back(std::move(at));
            return;
        }
        out.push_back(reduce_attempt(g, "T8-F6-split", {e(z, zp)}, {}));
        return;
    }
    // z' has an open twin z* in G - zz'; detach z' from its other neighbours.
    std::vector<Edge> detach;
    for (int q : g.neighbours(zp))
        if (q != z) detach.push_back(e(zp, q));
    Graph star = remove_edges(g, detach);
    auto comps = components(star);
    const int zpp = detach.front().first == zp ? detach.front().second : detach.front().first;
    if (component_of(comps, zpp) == component_of(comps, z)) {
        out.push_back(reduce_attempt(g, "T8-F6-twin-joined", detach, {}));
        return;
    }
    const VertexSet& side = comps[component_of(comps, zpp)];
    if (is_triangle_component(star, side)) {
        // side = {z*, z'', z'''}; z* is the vertex not adjacent to z'.
        int zstar = -1;
        for (int q : side)
            if (!g.has_edge(q, zp)) zstar = q;
        if (zstar < 0) return;
        for (int q : side) {
            if (q == zstar) continue;
            const int other = other_neighbour(star, q, {zstar});
            out.push_back(reduce_attempt(g, "T8-F6-twin-K3", {e(q, zstar), e(q, other)}, {}));
        }
        return;
    }
    out.push_back(reduce_attempt(g, "T8-F6-twin-split", detach, {}));
}

// Attempts grouped as the argument rules them out: a degree-2 common
// neighbour first, then adjacent common neighbours, then a shared third
// neighbour, then three distinct third neighbours.
using Buckets = std::array<std::vector<Attempt>, 4>;

void anchor_attempts(const Graph& g, int u, int v, Buckets& out) {
    const auto& c = g.neighbours(u);
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    int deg2 = -1;
    for (int i = 0; i < 3; ++i)
        if (g.degree(c[i]) == 2) deg2 = i;
    for (const auto& p : perms) {
        const int x = c[p[0]], y = c[p[1]], z = c[p[2]];
        if (deg2 >= 0) {
            if (x == c[deg2]) degree_two_common(g, u, v, x, y, z, out[0]);
            continue;
        }
        if (g.has_edge(y, z)) {
            f3_situation(g, u, v, x, y, z, out[1]);
            continue;
        }
        if (g.has_edge(x, y) || g.has_edge(x, z)) continue;
        const int xp = other_neighbour(g, x, {u, v});
        const int yp = other_neighbour(g, y, {u, v});
        const int zp = other_neighbour(g, z, {u, v});
        if (xp == yp && yp == zp) continue;  // K3,3
        if (yp == zp) {
            f45_situation(g, u, v, x, y, z, yp, out[2]);
            continue;
        }
        if (xp == yp || xp == zp) continue;  // another naming puts the shared vertex on y, z
        if (p[0] > p[1]) continue;  // F6 depends on the choice of z only
        if (g.degree(xp) == 1 && g.degree(yp) == 1 && g.degree(zp) == 1) {
            if (g.order() == 8) out[3].push_back(direct_attempt(g, "T8-F6-small", {u, x, y, z}));
            continue;
        }
        if (g.degree(zp) >= 2) f6_situation(g, z, zp, out[3]);
    }
}

}  // namespace

std::vector<Attempt> thm8_attempts(const Graph& g) {
    Buckets buckets;
    for (const auto& p : open_twins_of_degree(g, 3)) {
        anchor_attempts(g, p.u, p.v, buckets);
        anchor_attempts(g, p.v, p.u, buckets);
    }
    std::vector<Attempt> out;
    for (auto& bucket : buckets)
        for (auto& a : bucket) out.push_back(std::move(a));
    return out;
}

}  // namespace locdom::detail
