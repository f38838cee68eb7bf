#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "locdom/errors.hpp"
#include "locdom/ld.hpp"
#include "locdom/solver.hpp"

using namespace locdom;
using namespace testing_graphs;

TEST_CASE("exact values on small named graphs") {
    auto p4 = ld_number_exact(path(4));
    CHECK(p4.value == 2);
    CHECK(p4.witness == VertexSet(4, {0, 2}));
    CHECK(ld_number_exact(complete(5)).value == 4);
    CHECK(ld_number_exact(star(3)).value == 3);
    auto c5 = ld_number_exact(cycle(5));
    CHECK(c5.value == 2);
    CHECK(c5.witness == VertexSet(5, {0, 2}));
    CHECK(ld_number_exact(prism()).value == 3);
    CHECK(ld_number_exact(k33()).value == 4);
    CHECK(ld_number_exact(Graph(0)).value == 0);
    CHECK(ld_number_exact(Graph(3)).value == 3);
}

TEST_CASE("total variant") {
    CHECK(ltd_number_exact(path(4)).value == 2);
    CHECK(ltd_number_exact(cycle(4)).value == 2);
    try {
        ltd_number_exact(Graph::from_edges(3, {{0, 1}}));
        FAIL("expected IsolatedVertex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IsolatedVertex);
    }
}

TEST_CASE("lower bounds") {
    CHECK(subcubic_lower_bound(path(7)) == 3);
    CHECK(subcubic_lower_bound(Graph(0)) == 0);
    CHECK_THROWS_AS(subcubic_lower_bound(star(4)), Error);
    CHECK(degree_lower_bound(Graph(3)) == 2);
}

TEST_CASE("budget exhaustion reports bounds") {
    SolverBudget b;
    b.max_nodes = 3;
    try {
        ld_number_exact(cycle(30), b);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.lower_bound <= e.upper_bound);
        CHECK(e.lower_bound >= 12);
    }
}

TEST_CASE("exact agrees with naive on random graphs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 11);
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) es.emplace_back(i, j);
        auto g = Graph::from_edges(n, es);
        auto a = ld_number_exact(g);
        auto b = naive_ld_number(g);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(verify_ld(g, a.witness).valid());
        bool isolated = false;
        for (int v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
        if (!isolated) {
            auto c = ltd_number_exact(g);
            auto d = naive_ltd_number(g);
            CHECK(c.value == d.value);
            CHECK(c.witness == d.witness);
        }
    }
}
