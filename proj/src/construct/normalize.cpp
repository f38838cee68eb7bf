#include "locdom/normalize.hpp"

#include "locdom/errors.hpp"
#include "locdom/ld.hpp"
#include "locdom/twins.hpp"

namespace locdom {

namespace {

void check_input(const Graph& g, const VertexSet& s) {
    if (g.order() < 3)
        throw HypothesisViolated(Hypothesis::NonTrivialOrder, {}, "normalization needs at least three vertices");
    if (!is_connected(g)) throw HypothesisViolated(Hypothesis::Connected, {}, "graph is disconnected");
    if (s.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex set universe does not match the graph order");
    auto verdict = verify_ld(g, s);
    if (!verdict.valid()) {
        std::vector<int> witness;
        if (verdict.u >= 0) witness.push_back(verdict.u);
        witness.push_back(verdict.v);
        throw HypothesisViolated(Hypothesis::LocatingDominating, witness,
                                 "input set is not locating-dominating: " + verdict.describe());
    }
}

VertexSet supports_in(const Graph& g, const LeafSupport& ls, VertexSet s) {
    for (int sup : ls.supports) {
        if (s.contains(sup)) continue;
        // Each leaf of a missing support dominates itself.
        for (int leaf : g.neighbours(sup)) {
            if (g.degree(leaf) != 1) continue;
            s.erase(leaf);
            s.insert(sup);
            break;
        }
    }
    return s;
}

}  // namespace

VertexSet normalize_supports_in(const Graph& g, const VertexSet& s) {
    check_input(g, s);
    return supports_in(g, leaves_and_supports(g), s);
}

VertexSet normalize_leaves_out(const Graph& g, const VertexSet& s) {
    check_input(g, s);
    auto ls = leaves_and_supports(g);
    for (int sup : ls.supports) {
        int first = -1;
        for (int w : g.neighbours(sup)) {
            if (g.degree(w) != 1) continue;
            if (first >= 0)
                throw HypothesisViolated(Hypothesis::NoLeafTwins, {first, w},
                                         "support " + std::to_string(sup) + " has two leaves");
            first = w;
        }
    }
    VertexSet out = supports_in(g, ls, s);
    for (int leaf : ls.leaves) {
        if (!out.contains(leaf)) continue;
        const int sup = ls.support_of[leaf];
        VertexSet without = out;
        without.erase(leaf);
        if (is_ld_set(g, without)) {
            out = std::move(without);
            continue;
        }
        const VertexSet target(g.order(), {sup});
        for (int v = 0; v < g.order(); ++v) {
            if (out.contains(v) || iset(g, out, v) != target) continue;
            without.insert(v);
            out = std::move(without);
            break;
        }
    }
    return out;
}

}  // namespace locdom
