#include "locdom/ld.hpp"

#include <map>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

void check_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "set universe does not match graph order");
}

}  // namespace

VertexSet iset(const Graph& g, const VertexSet& s, int v) {
    check_universe(g, s);
    VertexSet out(g.order());
    if (s.contains(v)) out.insert(v);
    for (int w : g.neighbours(v))
        if (s.contains(w)) out.insert(w);
    return out;
}

std::string LdVerdict::describe() const {
    switch (kind) {
        case Kind::Valid: return "Valid";
        case Kind::Undominated: return "Undominated(" + std::to_string(v) + ")";
        case Kind::Unseparated:
            return "Unseparated(" + std::to_string(u) + "," + std::to_string(v) + ")";
        case Kind::NotTotallyDominated: return "NotTotallyDominated(" + std::to_string(v) + ")";
    }
    return "?";
}

LdVerdict verify_ld(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    std::map<std::vector<int>, int> first_with;
    std::vector<std::vector<int>> isets(g.order());
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        for (int w : g.neighbours(v))
            if (s.contains(w)) isets[v].push_back(w);
        if (isets[v].empty()) return LdVerdict::undominated(v);
    }
    // Scanning v in increasing order, the first collision found for each
    // earlier u is its smallest partner; keep the lexicographically least pair.
    LdVerdict best = LdVerdict::ok();
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        auto [it, inserted] = first_with.emplace(isets[v], v);
        if (inserted) continue;
        int u = it->second;
        if (best.valid() || u < best.u) best = LdVerdict::unseparated(u, v);
    }
    return best;
}

LdVerdict verify_ltd(const Graph& g, const VertexSet& s) {
    auto verdict = verify_ld(g, s);
    if (!verdict.valid()) return verdict;
    for (int v = 0; v < g.order(); ++v) {
        bool hit = false;
        for (int w : g.neighbours(v))
            if (s.contains(w)) {
                hit = true;
                break;
            }
        if (!hit) return LdVerdict::not_totally_dominated(v);
    }
    return verdict;
}

}  // namespace locdom
