// Twin-free graphs: reductions around a triangle or a four-cycle.

#include <array>

#include "engine_internal.hpp"
#include "locdom/twins.hpp"

namespace locdom::detail {

namespace {

Edge e(int u, int v) { return std::minmax(u, v); }

bool twin_free_without(const Graph& g, std::initializer_list<Edge> edges) {
    return is_twin_free(remove_edges(g, edges));
}

// Open-twin partner of x in g - removed (labels of g), or -1.
int partner_after_removal(const Graph& g, std::initializer_list<int> removed, int x) {
    auto [h, map] = remove_vertices(g, removed);
    const int hx = map.to_new(x);
    for (int y = 0; y < h.order(); ++y)
        if (y != hx && h.neighbours(y) == h.neighbours(hx)) return map.to_old(y);
    return -1;
}

void triangle_attempts(const Graph& g, const Triangle& t, std::vector<Attempt>& out) {
    int deg2 = 0;
    for (int x : t) deg2 += g.degree(x) == 2;
    if (deg2 == 1) {
        int a = -1;
        for (int x : t)
            if (g.degree(x) == 2) a = x;
        std::array<int, 2> rest{};
        int k = 0;
        for (int x : t)
            if (x != a) rest[k++] = x;
        for (int flip = 0; flip < 2; ++flip) {
            const int b = rest[flip], c = rest[1 - flip];
            const int bp = other_neighbour(g, b, {a, c});
            const int cp = other_neighbour(g, c, {a, b});
            if (twin_free_without(g, {e(a, b)})) {
                out.push_back(reduce_attempt(g, "P6-2.1.1", {e(a, b)}, {}));
            } else if (g.order() == 5 && bp >= 0 && cp >= 0) {
                if (g.degree(bp) == 1 && g.degree(cp) == 1)
                    out.push_back(direct_attempt(g, "P6-2.1.2a", {b, c}));
                else if (g.has_edge(bp, cp) && g.degree(bp) == 2 && g.degree(cp) == 2)
                    out.push_back(direct_attempt(g, "P6-2.1.2b", {b, c}));
            }
        }
        return;
    }
    if (deg2 != 0) return;
    const int a0 = t[0], b0 = t[1], c0 = t[2];
    const int ap0 = other_neighbour(g, a0, {b0, c0});
    const int bp0 = other_neighbour(g, b0, {a0, c0});
    const int cp0 = other_neighbour(g, c0, {a0, b0});
    if (g.has_edge(ap0, bp0) && g.has_edge(ap0, cp0) && g.has_edge(bp0, cp0)) {
        out.push_back(direct_attempt(g, "P6-2.2-prism", {a0, b0, c0}));
        return;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int a = t[i], b = t[j], c = t[3 - i - j];
            const int ap = other_neighbour(g, a, {b, c});
            const int bp = other_neighbour(g, b, {a, c});
            const int cp = other_neighbour(g, c, {a, b});
            if (g.has_edge(ap, bp)) continue;
            Graph gab = remove_edges(g, {e(a, b)});
            if (is_twin_free(gab)) {
                out.push_back(reduce_attempt(g, "P6-2.2.1", {e(a, b)}, {}));
                continue;
            }
            if (!same_neighbours(gab, a, cp)) continue;
            Attempt at = reduce_attempt(g, "P6-2.2.2", {}, {c, cp});
            at.patches = [&g, a, b, c, ap, cp](const VertexSet& s) {
                std::vector<Patch> ps;
                if (s.contains(ap)) ps.push_back(make_patch(g, "P6-2.2.2a", {}, {cp}));
                if (s.contains(a) || s.contains(b)) ps.push_back(make_patch(g, "P6-2.2.2b", {}, {c}));
                return ps;
            };
            out.push_back(std::move(at));
        }
}

struct Buckets {
    std::vector<Attempt> two_deg2, one_deg2_leaf, one_deg2, all_deg3;
};

void two_degree_two(const Graph& g, int a, int b, int c, int d, Buckets& out) {
    auto [h, map] = remove_vertices(g, {a, b});
    if (is_twin_free(h)) {
        Attempt at = reduce_attempt(g, "P6-1.1.1", {}, {a, b});
        at.patches = [&g, a, b](const VertexSet&) {
            return std::vector<Patch>{make_patch(g, "P6-1.1.1", {}, {a}),
                                      make_patch(g, "P6-1.1.1", {}, {b})};
        };
        out.two_deg2.push_back(std::move(at));
        return;
    }
    const int cpart = partner_after_removal(g, {a, b}, c);
    const int dpart = partner_after_removal(g, {a, b}, d);
    if (cpart >= 0 && dpart >= 0) {
        if (g.order() == 6) out.two_deg2.push_back(direct_attempt(g, "P6-1.1.2-n6", {a, d, cpart}));
        return;
    }
    if (cpart < 0) return;
    const int ee = other_neighbour(g, c, {b, d});
    if (ee < 0) return;
    const int f = other_neighbour(g, ee, {c, cpart});
    if (f >= 0 && g.degree(f) == 1)
        out.two_deg2.push_back(direct_attempt(g, "P6-1.1.2-n7", {b, d, ee}));
    else
        out.two_deg2.push_back(reduce_attempt(g, "P6-1.1.2", {}, {a, b, c, d}, {b, d}));
}

void one_degree_two(const Graph& g, int a, int b, int c, int d, Buckets& out) {
    const int bp = other_neighbour(g, b, {a, c});
    const int cp = other_neighbour(g, c, {b, d});
    const int dp = other_neighbour(g, d, {a, c});
    if (bp < 0 || cp < 0 || dp < 0) return;
    if (g.degree(bp) == 1 && g.degree(dp) == 1) {
        out.one_deg2_leaf.push_back(reduce_attempt(g, "P6-1.2.1", {}, {a, d, dp}, {d}));
        return;
    }
    if (g.degree(bp) == 1) {
        out.one_deg2_leaf.push_back(reduce_attempt(g, "P6-1.2.2", {e(a, b), e(c, d)}, {}));
        return;
    }
    if (g.degree(dp) == 1) return;  // the reflected labelling covers it
    Graph h = remove_edges(g, {e(a, b), e(b, c)});
    if (is_twin_free(h)) {
        Attempt at = reduce_attempt(g, "P6-1.2.3.1", {e(a, b), e(b, c)}, {});
        at.patches = [&g, c, cp](const VertexSet& s) {
            std::vector<Patch> ps{make_patch(g, "P6-1.2.3.1", {}, {})};
            if (s.contains(c) && !s.contains(cp)) ps.push_back(make_patch(g, "P6-1.2.3.1", {c}, {cp}));
            return ps;
        };
        out.one_deg2.push_back(std::move(at));
        return;
    }
    if (same_neighbours(h, c, dp)) {
        out.one_deg2.push_back(reduce_attempt(g, "P6-1.2.3.2", {}, {c, d}, {d}));
        return;
    }
    const int bpp = leaf_of(g, bp);
    if (bpp < 0 || !same_neighbours(h, b, bpp)) return;
    if (g.has_edge(bp, cp)) {
        out.one_deg2.push_back(reduce_attempt(g, "P6-1.2.3.3a", {}, {bp, bpp}, {bpp}));
        return;
    }
    Attempt at = reduce_attempt(g, "P6-1.2.3.3b", {e(b, bp)}, {});
    at.patches = [&g, bp, bpp](const VertexSet& s) {
        std::vector<Patch> ps{make_patch(g, "P6-1.2.3.3b", {}, {})};
        if (s.contains(bpp) && !s.contains(bp)) ps.push_back(make_patch(g, "P6-1.2.3.3b", {bpp}, {bp}));
        return ps;
    };
    out.one_deg2.push_back(std::move(at));
}

void all_degree_three(const Graph& g, int a, int b, int c, int d, Buckets& out) {
    const int ap = other_neighbour(g, a, {b, d});
    const int bp = other_neighbour(g, b, {a, c});
    const int cp = other_neighbour(g, c, {b, d});
    const int dp = other_neighbour(g, d, {a, c});
    if (g.has_edge(ap, bp) && g.has_edge(bp, cp) && g.has_edge(cp, dp) && g.has_edge(dp, ap)) {
        if (g.order() == 8) out.all_deg3.push_back(direct_attempt(g, "P2BoxC4", {a, b, c, d}));
        return;
    }
    if (g.has_edge(ap, bp)) return;
    if (g.has_edge(bp, cp) && g.has_edge(ap, dp)) {
        if (!has_leaf(g, ap) && !has_leaf(g, bp) && !has_leaf(g, cp) && !has_leaf(g, dp)) {
            out.all_deg3.push_back(
                reduce_attempt(g, "P6-1.3.2a", {e(a, b), e(b, c), e(c, d), e(d, a)}, {}));
        } else if (has_leaf(g, ap)) {
            out.all_deg3.push_back(reduce_attempt(g, "P6-1.3.2b", {}, {ap, leaf_of(g, ap)}, {ap}));
        }
        return;
    }
    if (g.has_edge(bp, cp)) return;
    if (twin_free_without(g, {e(a, b), e(b, c)})) {
        out.all_deg3.push_back(reduce_attempt(g, "P6-1.3.3.1", {e(a, b), e(b, c)}, {}));
        return;
    }
    if (g.degree(bp) == 1) {
        out.all_deg3.push_back(reduce_attempt(g, "P6-1.3.3.2a", {}, {b, bp}, {b}));
        return;
    }
    const int bpp = leaf_of(g, bp, b);
    if (bpp < 0) return;
    if (g.degree(bp) == 2)
        out.all_deg3.push_back(reduce_attempt(g, "P6-1.3.3.2b", {}, {bp, bpp}, {bp}));
    else
        out.all_deg3.push_back(reduce_attempt(g, "P6-1.3.3.2c", {e(b, bp)}, {}));
}

}  // namespace

std::vector<Attempt> prop6_attempts(const Graph& g) {
    std::vector<Attempt> out;
    auto tris = triangles(g);
    if (!tris.empty()) {
        for (const auto& t : tris) triangle_attempts(g, t, out);
        return out;
    }
    Buckets buckets;
    for (const auto& cyc : four_cycles(g)) {
        for (int r = 0; r < 4; ++r)
            for (int dir : {1, 3}) {
                const int a = cyc[r], b = cyc[(r + dir) % 4], c = cyc[(r + 2 * dir) % 4],
                          d = cyc[(r + 3 * dir) % 4];
                int deg2 = 0;
                for (int x : cyc) deg2 += g.degree(x) == 2;
                if (deg2 == 2) {
                    if (g.degree(a) == 2 && g.degree(b) == 2) two_degree_two(g, a, b, c, d, buckets);
                } else if (deg2 == 1) {
                    if (g.degree(a) == 2) one_degree_two(g, a, b, c, d, buckets);
                } else if (deg2 == 0) {
                    all_degree_three(g, a, b, c, d, buckets);
                }
            }
    }
    for (auto* bucket : {&buckets.two_deg2, &buckets.one_deg2_leaf, &buckets.one_deg2, &buckets.all_deg3})
        for (auto& a : *bucket) out.push_back(std::move(a));
    return out;
}

}  // namespace locdom::detail
