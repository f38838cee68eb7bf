#include <functional>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "locdom/construct.hpp"
#include "locdom/enumerate.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/ld.hpp"
#include "locdom/normalize.hpp"
#include "locdom/twins.hpp"

using namespace locdom;
using namespace testing_graphs;

namespace {

VertexSet set_of(int n, std::vector<int> vs) { return VertexSet::from_vector(n, vs); }

Hypothesis hypothesis_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const HypothesisViolated& e) {
        return e.hypothesis;
    }
    FAIL("no HypothesisViolated thrown");
    return Hypothesis::Connected;
}

// Random LD-set: a random subset grown by the vertices named in failing verdicts.
VertexSet random_ld_set(const Graph& g, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.4);
    VertexSet s(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (coin(rng)) s.insert(v);
    for (auto verdict = verify_ld(g, s); !verdict.valid(); verdict = verify_ld(g, s))
        s.insert(verdict.u >= 0 && coin(rng) ? verdict.u : verdict.v);
    return s;
}

bool support_with_two_leaves(const Graph& g) {
    auto ls = leaves_and_supports(g);
    for (int s : ls.supports) {
        int count = 0;
        for (int w : g.neighbours(s)) count += g.degree(w) == 1;
        if (count > 1) return true;
    }
    return false;
}

void check_certificate(const Graph& g, const LdCertificate& cert) {
    CHECK(is_ld_set(g, cert.witness));
    CHECK(cert.witness.size() <= g.order() / 2);
    CHECK(replay_certificate(g, cert) == cert.witness);
    REQUIRE_FALSE(cert.trace.empty());
    CHECK(cert.trace.front().depth == 0);
    CHECK(cert.trace.front().witness_size == cert.witness.size());
    int fallbacks = 0;
    for (const auto& s : cert.trace) {
        CHECK(is_construct_rule(s.rule_id));
        fallbacks += is_fallback_rule(s.rule_id);
    }
    CHECK(fallbacks == cert.fallback_count);
    CHECK(static_cast<int>(cert.fallback_rules().size()) == cert.fallback_count);
}

}  // namespace

TEST_CASE("normalization examples") {
    const Graph p4 = path(4);
    CHECK(normalize_supports_in(p4, set_of(4, {0, 2})) == set_of(4, {1, 2}));
    CHECK(normalize_leaves_out(p4, set_of(4, {0, 2})) == set_of(4, {1, 2}));
    CHECK(normalize_leaves_out(p4, set_of(4, {1, 2})) == set_of(4, {1, 2}));
    CHECK(normalize_leaves_out(p4, set_of(4, {0, 1, 2})) == set_of(4, {1, 2}));
    CHECK(normalize_leaves_out(cycle(4), set_of(4, {0, 1})) == set_of(4, {0, 1}));

    auto d1 = generate(FamilySpec::deg1_twins(1));
    CHECK(hypothesis_of([&] { normalize_leaves_out(d1.graph, d1.witness); }) == Hypothesis::NoLeafTwins);
    CHECK(is_ld_set(d1.graph, normalize_supports_in(d1.graph, d1.witness)));

    CHECK(hypothesis_of([&] { normalize_leaves_out(p4, set_of(4, {0})); }) == Hypothesis::LocatingDominating);
    CHECK(hypothesis_of([&] { normalize_supports_in(path(2), set_of(2, {0})); }) ==
          Hypothesis::NonTrivialOrder);
    CHECK(hypothesis_of([&] {
              normalize_supports_in(Graph::from_edges(4, {{0, 1}, {2, 3}}), set_of(4, {0, 2}));
          }) == Hypothesis::Connected);
    CHECK_THROWS_AS(normalize_supports_in(p4, set_of(5, {1, 2})), Error);
}

TEST_CASE("normalization preserves location-domination on random sets") {
    std::mt19937 rng(2024);
    EnumFilter f;
    f.order = 9;
    auto gs = enumerate_graphs_up_to(f);
    std::erase_if(gs, [](const Graph& g) { return g.order() < 3; });
    int trials = 0;
    for (int round = 0; round < 2; ++round)
        for (const auto& g : gs) {
            const VertexSet s = random_ld_set(g, rng);
            auto ls = leaves_and_supports(g);
            VertexSet in = normalize_supports_in(g, s);
            CHECK(is_ld_set(g, in));
            CHECK(in.size() <= s.size());
            for (int sup : ls.supports) CHECK(in.contains(sup));
            if (support_with_two_leaves(g)) continue;
            VertexSet out = normalize_leaves_out(g, s);
            CHECK(is_ld_set(g, out));
            CHECK(out.size() <= s.size());
            for (int leaf : ls.leaves) CHECK_FALSE(out.contains(leaf));
            for (int sup : ls.supports) CHECK(out.contains(sup));
            ++trials;
        }
    CHECK(trials > 1000);
}

TEST_CASE("construct on named graphs") {
    auto p4 = construct_half_ld(path(4));
    CHECK(p4.witness.size() == 2);
    check_certificate(path(4), p4);

    auto ts = generate(FamilySpec::tight_subcubic(1));
    auto c = construct_half_ld(ts.graph);
    CHECK(c.witness.size() == 5);
    check_certificate(ts.graph, c);

    auto pr = construct_half_ld(prism());
    CHECK(pr.witness.size() == 3);
    check_certificate(prism(), pr);

    auto f3p = generate(FamilySpec::f3_prime());
    auto cf = construct_half_ld(f3p.graph);
    CHECK(cf.witness.size() == 2);
    check_certificate(f3p.graph, cf);

    for (auto spec : {FamilySpec::tight_subcubic(2), FamilySpec::p2_box_c4(), FamilySpec::f_graph(3),
                      FamilySpec::f_graph(6)}) {
        auto inst = generate(spec);
        if (!satisfies_bound_hypotheses(inst.graph)) continue;
        check_certificate(inst.graph, construct_half_ld(inst.graph));
    }

    CHECK(hypothesis_of([] { construct_half_ld(k33()); }) == Hypothesis::NotExcluded);
    CHECK(hypothesis_of([] { construct_half_ld(path(3)); }) == Hypothesis::NoLeafTwins);
    CHECK(hypothesis_of([] { construct_half_ld(star(4)); }) == Hypothesis::Subcubic);
}

TEST_CASE("construct for cubic graphs") {
    CHECK(construct_for_cubic(prism()).witness.size() == 3);
    auto t10 = generate(FamilySpec::tight_cubic10());
    auto c = construct_for_cubic(t10.graph);
    CHECK(c.witness.size() == 5);
    check_certificate(t10.graph, c);
    CHECK(hypothesis_of([] { construct_for_cubic(complete(4)); }) == Hypothesis::NotExcluded);
    CHECK(hypothesis_of([] { construct_for_cubic(path(4)); }) == Hypothesis::Cubic);
}

TEST_CASE("construct on every small graph meeting the hypotheses") {
    for (int n = 2; n <= 8; ++n) {
        EnumFilter f;
        f.order = n;
        f.hypotheses_only = true;
        for (const auto& g : enumerate_graphs(f)) {
            auto cert = construct_half_ld(g);
            check_certificate(g, cert);
            for (const auto& rule : cert.fallback_rules()) CHECK(rule == "P6-C4free");
        }
    }
}

TEST_CASE("construct options") {
    auto ts = generate(FamilySpec::tight_subcubic(2));
    ConstructOptions opts;
    opts.memoize = false;
    opts.small_edges = 0;
    opts.small_order = 2;
    auto c = construct_half_ld(ts.graph, opts);
    check_certificate(ts.graph, c);
    CHECK(c.witness == construct_half_ld(ts.graph).witness);
}

TEST_CASE("corrupted traces are rejected") {
    auto ts = generate(FamilySpec::tight_subcubic(2));
    const auto cert = construct_half_ld(ts.graph);
    REQUIRE(cert.trace.size() > 1);

    auto bad_rule = cert;
    bad_rule.trace[0].rule_id = "no-such-rule";
    CHECK_THROWS_AS(replay_certificate(ts.graph, bad_rule), Error);

    auto short_trace = cert;
    short_trace.trace.pop_back();
    CHECK_THROWS_AS(replay_certificate(ts.graph, short_trace), Error);

    auto long_trace = cert;
    long_trace.trace.push_back(cert.trace.back());
    CHECK_THROWS_AS(replay_certificate(ts.graph, long_trace), Error);

    auto bad_order = cert;
    bad_order.trace[0].order += 1;
    CHECK_THROWS_AS(replay_certificate(ts.graph, bad_order), Error);

    CHECK_THROWS_AS(replay_certificate(prism(), cert), Error);
    CHECK_FALSE(format_trace(cert).empty());
}
