#include <set>

#include "doctest.h"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/ld.hpp"
#include "locdom/solver.hpp"
#include "locdom/twins.hpp"

using namespace locdom;

namespace {

void check_instance(const FamilyInstance& inst) {
    CAPTURE(inst.spec.to_string());
    CHECK(inst.witness.universe() == inst.graph.order());
    CHECK(static_cast<int>(inst.labels.size()) == inst.graph.order());
    CHECK(std::set<std::string>(inst.labels.begin(), inst.labels.end()).size() == inst.labels.size());
    if (inst.claim_kind == ClaimKind::ExactLtd) {
        CHECK(is_ltd_set(inst.graph, inst.witness));
    } else {
        CHECK(is_ld_set(inst.graph, inst.witness));
        CHECK(inst.witness.size() == inst.claimed);
    }
}

bool all_degrees(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

}  // namespace

TEST_CASE("every family instance carries a valid witness") {
    for (int p = 1; p <= 5; ++p) check_instance(generate(FamilySpec::ltd_comb(p)));
    for (int k = 1; k <= 3; ++k) {
        check_instance(generate(FamilySpec::deg1_twins(k)));
        check_instance(generate(FamilySpec::deg2_twins(k)));
        check_instance(generate(FamilySpec::tight_subcubic(k)));
    }
    for (int r = 4; r <= 6; ++r)
        for (int k = 1; k <= 2; ++k) check_instance(generate(FamilySpec::closed_reg(r, k)));
    for (int i = 0; i <= 6; ++i) check_instance(generate(FamilySpec::f_graph(i)));
    check_instance(generate(FamilySpec::f3_prime()));
    check_instance(generate(FamilySpec::tight_cubic10()));
    check_instance(generate(FamilySpec::prism()));
    check_instance(generate(FamilySpec::p2_box_c4()));
    check_instance(generate(FamilySpec::k33()));
    for (int n = 2; n <= 6; ++n) {
        check_instance(generate(FamilySpec::path(n)));
        check_instance(generate(FamilySpec::complete(n)));
        check_instance(generate(FamilySpec::star(n)));
    }
}

TEST_CASE("order and size formulas") {
    for (int k = 1; k <= 3; ++k) {
        CHECK(generate(FamilySpec::deg1_twins(k)).graph.order() == 12 * k);
        CHECK(generate(FamilySpec::deg1_twins(k)).claimed == 7 * k);
        CHECK(generate(FamilySpec::deg2_twins(k)).graph.order() == 60 * k);
        CHECK(generate(FamilySpec::deg2_twins(k)).claimed == 32 * k);
        auto ts = generate(FamilySpec::tight_subcubic(k));
        CHECK(ts.graph.order() == 8 * k + 2);
        CHECK(ts.claimed == 4 * k + 1);
        CHECK(ts.graph.max_degree() <= 3);
    }
    for (int r = 4; r <= 6; ++r) {
        auto cr = generate(FamilySpec::closed_reg(r, 1));
        CHECK(cr.graph.order() == 3 * r + 3);
        CHECK(cr.claimed == 3 * r - 4);
        CHECK(all_degrees(cr.graph, r));
    }
    for (int p = 1; p <= 4; ++p) {
        auto c = generate(FamilySpec::ltd_comb(p));
        CHECK(c.graph.order() == 3 * p);
        CHECK(c.claimed == 2 * p);
    }
    auto t10 = generate(FamilySpec::tight_cubic10());
    CHECK(all_degrees(t10.graph, 3));
    CHECK(t10.witness.to_vector() == std::vector<int>{1, 2, 4, 6, 8});
    auto f3 = generate(FamilySpec::f_graph(3));
    CHECK(f3.graph.order() == 6);
    CHECK(f3.graph.edge_count() == 8);
}

TEST_CASE("twin structure of the families") {
    auto d1 = twin_report(generate(FamilySpec::deg1_twins(2)).graph);
    CHECK_FALSE(d1.open.empty());
    for (const auto& p : d1.open) CHECK(p.degree == 1);
    CHECK(d1.closed.empty());

    bool deg2 = false;
    for (const auto& p : twin_report(generate(FamilySpec::deg2_twins(1)).graph).open) deg2 |= p.degree == 2;
    CHECK(deg2);

    auto cr = generate(FamilySpec::closed_reg(4, 1));
    auto closed = twin_report(cr.graph).closed;
    for (const std::string i : {"1", "2", "3"})
        for (const std::string a : {"1", "2", "3"})
            for (const std::string b : {"1", "2", "3"}) {
                if (a >= b) continue;
                const TwinPair p{cr.vertex("q_" + i + "," + a), cr.vertex("q_" + i + "," + b), 4};
                CHECK(std::find(closed.begin(), closed.end(), p) != closed.end());
            }

    for (int k = 1; k <= 5; ++k) CHECK(is_twin_free(generate(FamilySpec::tight_subcubic(k)).graph));
}

TEST_CASE("exact values on small instances") {
    CHECK(ld_number_exact(generate(FamilySpec::deg1_twins(1)).graph).value == 7);
    CHECK(ld_number_exact(generate(FamilySpec::closed_reg(4, 1)).graph).value == 8);
    CHECK(ld_number_exact(generate(FamilySpec::tight_subcubic(1)).graph).value == 5);
    CHECK(ld_number_exact(generate(FamilySpec::tight_cubic10()).graph).value == 5);
    CHECK(ld_number_exact(generate(FamilySpec::prism()).graph).value == 3);
    CHECK(ld_number_exact(generate(FamilySpec::p2_box_c4()).graph).value == 4);
    for (int p = 1; p <= 4; ++p) CHECK(ltd_number_exact(generate(FamilySpec::ltd_comb(p)).graph).value == 2 * p);
}

TEST_CASE("F-graph witnesses") {
    auto f3p = generate(FamilySpec::f3_prime());
    CHECK(f3p.graph.order() == 5);
    CHECK(f3p.witness == VertexSet::from_vector(5, {f3p.vertex("v"), f3p.vertex("z")}));
    auto f3 = generate(FamilySpec::f_graph(3));
    CHECK(f3.witness == VertexSet::from_vector(6, {f3.vertex("x'"), f3.vertex("v"), f3.vertex("z")}));
    auto f6 = generate(FamilySpec::f_graph(6));
    CHECK(f6.witness.size() == 4);
    CHECK(f6.witness.contains(f6.vertex("u")));
}

TEST_CASE("Deg2Twins gadget lower bound") {
    auto gadget = deg2_twins_gadget();
    CHECK(gadget.graph.order() == 11);
    CHECK(gadget.labels[0][0] == 'u');
    const int n = gadget.graph.order();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.insert(v);
        if (!is_ld_set(gadget.graph, s)) continue;
        best = std::min(best, s.size() - (s.contains(0) ? 1 : 0));
    }
    CHECK(best >= 6);
}

TEST_CASE("family spec parsing") {
    for (const auto& spec : {FamilySpec::deg1_twins(2), FamilySpec::closed_reg(5, 1), FamilySpec::f_graph(4),
                             FamilySpec::k33(), FamilySpec::path(7), FamilySpec::tight_cubic10()}) {
        auto back = parse_family_spec(spec.to_string());
        CHECK(back.kind == spec.kind);
        CHECK(back.a == spec.a);
        CHECK(back.b == spec.b);
    }
    CHECK(parse_family_spec("closed-reg:4,1").b == 1);
    CHECK_FALSE(family_names().empty());
    for (const char* bad : {"nope", "deg1-twins", "deg1-twins:x", "k33:1", "closed-reg:4"})
        CHECK_THROWS_AS(parse_family_spec(bad), Error);
    CHECK_THROWS_AS(generate(FamilySpec::deg1_twins(0)), Error);
    CHECK_THROWS_AS(generate(FamilySpec::closed_reg(3, 1)), Error);
    CHECK_THROWS_AS(generate(FamilySpec::f_graph(7)), Error);
    CHECK_THROWS_AS(generate(FamilySpec::path(0)), Error);
    CHECK_THROWS_AS(generate(FamilySpec::tight_cubic10()).vertex("nowhere"), Error);
}
