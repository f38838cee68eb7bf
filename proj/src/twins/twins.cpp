#include "locdom/twins.hpp"

#include <algorithm>
#include <numeric>

namespace locdom {

TwinReport twin_report(const Graph& g) {
    TwinReport r;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(u) != g.degree(v)) continue;
            const auto& nu = g.neighbours(u);
            const auto& nv = g.neighbours(v);
            if (nu == nv) {
                r.open.push_back({u, v, g.degree(u)});
            } else if (g.has_edge(u, v)) {
                auto cu = g.closed_neighbourhood(u);
                if (cu == g.closed_neighbourhood(v)) r.closed.push_back({u, v, g.degree(u)});
            }
        }
    return r;
}

std::vector<TwinPair> open_twins_of_degree(const Graph& g, int d) {
    std::vector<TwinPair> out;
    for (const auto& p : twin_report(g).open)
        if (p.degree == d) out.push_back(p);
    return out;
}

std::vector<TwinPair> closed_twins_of_degree(const Graph& g, int d) {
    std::vector<TwinPair> out;
    for (const auto& p : twin_report(g).closed)
        if (p.degree == d) out.push_back(p);
    return out;
}

bool has_open_twins(const Graph& g) { return !twin_report(g).open.empty(); }

bool is_twin_free(const Graph& g) { return twin_report(g).twin_free(); }

LeafSupport leaves_and_supports(const Graph& g) {
    LeafSupport r;
    r.support_of.assign(g.order(), -1);
    std::vector<bool> is_support(g.order(), false);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) {
            r.leaves.push_back(v);
            r.support_of[v] = g.neighbours(v)[0];
            is_support[g.neighbours(v)[0]] = true;
        }
    for (int v = 0; v < g.order(); ++v)
        if (is_support[v]) r.supports.push_back(v);
    return r;
}

std::vector<Triangle> triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (int a = 0; a < g.order(); ++a)
        for (int b : g.neighbours(a)) {
            if (b <= a) continue;
            for (int c : g.neighbours(b))
                if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
        }
    return out;
}

std::vector<FourCycle> four_cycles(const Graph& g) {
    std::vector<FourCycle> out;
    for (int a = 0; a < g.order(); ++a)
        for (int b : g.neighbours(a)) {
            if (b <= a) continue;
            for (int c : g.neighbours(b)) {
                if (c <= a || c == b) continue;
                for (int d : g.neighbours(c)) {
                    if (d <= b || d == c || d == a) continue;
                    if (g.has_edge(d, a)) out.push_back({a, b, c, d});
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

StructureLemmaReport check_structure_lemmas(const Graph& g) {
    if (!is_subcubic(g))
        throw HypothesisViolated(Hypothesis::Subcubic, {}, "structure lemmas need maximum degree 3");
    auto tw = twin_report(g);
    if (!tw.twin_free()) {
        auto p = tw.open.empty() ? tw.closed.front() : tw.open.front();
        throw HypothesisViolated(Hypothesis::NoDegreeTwoTwins, {p.u, p.v},
                                 "structure lemmas need a twin-free graph");
    }
    StructureLemmaReport r;
    auto tris = triangles(g);
    r.triangle_free = tris.empty();
    auto cycles = four_cycles(g);

    if (r.triangle_free) {
        for (const auto& c : cycles)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int w : g.neighbours(c[i])) {
                        if (!g.has_edge(w, c[j])) continue;
                        if (std::find(c.begin(), c.end(), w) != c.end()) continue;
                        r.c4_common_neighbours = false;
                        r.violations.push_back("vertices " + std::to_string(c[i]) + "," +
                                               std::to_string(c[j]) +
                                               " of a four-cycle share neighbour " +
                                               std::to_string(w));
                    }
    }
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            int shared = 0;
            for (int a : tris[i])
                for (int b : tris[j]) shared += a == b;
            if (shared >= 2) {
                r.triangles_edge_disjoint = false;
                r.violations.push_back("two triangles share an edge");
            }
        }
    for (const auto& c : cycles)
        if (g.has_edge(c[0], c[2]) || g.has_edge(c[1], c[3])) {
            r.four_cycles_induced = false;
            r.violations.push_back("four-cycle starting at " + std::to_string(c[0]) +
                                   " has a chord");
        }
    return r;
}

bool is_excluded_small_graph(const Graph& g) {
    const int n = g.order();
    const int m = g.edge_count();
    if (n == 3 && m == 3) return true;
    if (n == 4 && m == 6) return true;
    return n == 6 && is_cubic(g) && triangles(g).empty();
}

std::optional<HypothesisViolated> bound_hypotheses_violation(const Graph& g) {
    if (g.order() < 2)
        return HypothesisViolated(Hypothesis::NonTrivialOrder, {}, "need at least two vertices");
    if (!is_connected(g)) return HypothesisViolated(Hypothesis::Connected, {}, "graph is disconnected");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 3)
            return HypothesisViolated(Hypothesis::Subcubic, {v},
                                      "vertex " + std::to_string(v) + " has degree above 3");
    for (const auto& p : twin_report(g).open) {
        if (p.degree == 1)
            return HypothesisViolated(Hypothesis::NoLeafTwins, {p.u, p.v},
                                      "open twins of degree 1");
        if (p.degree == 2)
            return HypothesisViolated(Hypothesis::NoDegreeTwoTwins, {p.u, p.v},
                                      "open twins of degree 2");
    }
    if (is_excluded_small_graph(g)) {
        const char* name = g.order() == 3 ? "K3" : g.order() == 4 ? "K4" : "K3,3";
        std::vector<int> all(g.order());
        std::iota(all.begin(), all.end(), 0);
        return HypothesisViolated(Hypothesis::NotExcluded, all, std::string("graph is ") + name);
    }
    return std::nullopt;
}

bool satisfies_bound_hypotheses(const Graph& g) { return !bound_hypotheses_violation(g); }

}  // namespace locdom
