#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "locdom/ld.hpp"

using namespace locdom;
using namespace testing_graphs;

namespace {

// Direct reading of the definition, pair by pair.
bool definitional_ld(const Graph& g, const VertexSet& s) {
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        if (iset(g, s, v).empty()) return false;
        for (int w = v + 1; w < g.order(); ++w)
            if (!s.contains(w) && iset(g, s, v) == iset(g, s, w)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("iset") {
    auto g = path(4);
    VertexSet s(4, {0, 2});
    CHECK(iset(g, s, 1) == VertexSet(4, {0, 2}));
    CHECK(iset(g, s, 3) == VertexSet(4, {2}));
    CHECK(iset(g, s, 0) == VertexSet(4, {0}));
}

TEST_CASE("verify_ld verdicts") {
    CHECK(verify_ld(path(4), VertexSet(4, {0, 2})).valid());
    CHECK(verify_ld(complete(4), VertexSet(4, {0, 1})) == LdVerdict::unseparated(2, 3));
    CHECK(verify_ld(path(4), VertexSet(4, {0})) == LdVerdict::undominated(2));
    CHECK(verify_ld(path(3), VertexSet(3)) == LdVerdict::undominated(0));
    CHECK(verify_ld(Graph(0), VertexSet(0)).valid());
    // Domination failures win over separation failures.
    CHECK(verify_ld(star(3), VertexSet(4, {1})) == LdVerdict::undominated(2));
    // Smallest pair across several collisions.
    CHECK(verify_ld(star(3), VertexSet(4, {0})) == LdVerdict::unseparated(1, 2));
    CHECK(verify_ld(cycle(6), VertexSet(6, {0, 3})) == LdVerdict::unseparated(1, 5));
}

TEST_CASE("verify_ltd verdicts") {
    CHECK(verify_ltd(path(4), VertexSet(4, {1, 2})).valid());
    auto bad = verify_ltd(path(4), VertexSet(4, {0, 2}));
    CHECK_FALSE(bad.valid());
    CHECK(bad == LdVerdict::not_totally_dominated(0));
    CHECK(verify_ltd(cycle(5), VertexSet(5)) == LdVerdict::undominated(0));
}

TEST_CASE("verify_ld agrees with the definition on random sets") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto g = random_subcubic(n, 0.6, rng);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 2) s.insert(v);
        auto verdict = verify_ld(g, s);
        CHECK(verdict.valid() == definitional_ld(g, s));
        if (verdict.kind == LdVerdict::Kind::Undominated) {
            CHECK_FALSE(s.contains(verdict.v));
            CHECK(iset(g, s, verdict.v).empty());
        }
        if (verdict.kind == LdVerdict::Kind::Unseparated) {
            CHECK(verdict.u < verdict.v);
            CHECK(iset(g, s, verdict.u) == iset(g, s, verdict.v));
        }
    }
}
