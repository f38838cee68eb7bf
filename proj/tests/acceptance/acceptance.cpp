// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locdom/construct.hpp"
#include "locdom/enumerate.hpp"
#include "locdom/families.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/ld.hpp"
#include "locdom/normalize.hpp"
#include "locdom/solver.hpp"
#include "locdom/twins.hpp"

using namespace locdom;

namespace {

// Wall-clock budgets per criterion, in seconds. All value checks are exact.
constexpr double kBudget1 = 1.0;
constexpr double kBudget2 = 120.0;
constexpr double kBudget3 = 60.0;
constexpr double kBudget4 = 720.0;
constexpr double kBudget5 = 600.0;
constexpr double kBudget6 = 120.0;
constexpr double kBudget7 = 1.0;
constexpr double kBudget8 = 60.0;
constexpr double kBudget9 = 180.0;

// Time limit for the exact solve of Deg2Twins(1); the outcome is reported either way.
constexpr double kDeg2SolveSeconds = 600.0;
constexpr int kNormalizationPairs = 1000;

struct Outcome {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

std::vector<Graph> connected_subcubic(int n) {
    EnumFilter f;
    f.order = n;
    return enumerate_graphs(f);
}

Graph star_graph(int n) {
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.emplace_back(0, i);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

void criterion1(Outcome& o) {
    o.expect(ld_number_exact(generate(FamilySpec::path(4)).graph).value == 2, "gamma(P4) = 2");
    for (int n = 3; n <= 6; ++n)
        o.expect(ld_number_exact(complete_graph(n)).value == n - 1, "gamma(K" + std::to_string(n) + ") = n-1");
    for (int n = 4; n <= 6; ++n)
        o.expect(ld_number_exact(star_graph(n)).value == n - 1, "gamma(K1," + std::to_string(n - 1) + ") = n-1");
}

void criterion2(Outcome& o) {
    int graphs = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& g : connected_subcubic(n)) {
            ++graphs;
            auto fast = ld_number_exact(g);
            auto slow = naive_ld_number(g);
            o.expect(fast.value == slow.value && fast.witness == slow.witness, "solver = naive on " + to_graph6(g));
        }
    o.notes << " graphs=" << graphs;
}

void criterion3(Outcome& o) {
    for (int k = 1; k <= 2; ++k) {
        auto inst = generate(FamilySpec::tight_subcubic(k));
        const int n = inst.graph.order();
        VertexSet us(n);
        for (int i = 1; i <= 4 * k + 1; ++i) us.insert(inst.vertex("u_" + std::to_string(i)));
        const int gamma = ld_number_exact(inst.graph).value;
        o.expect(gamma == 4 * k + 1 && 2 * gamma == n, "TightSubcubic(" + std::to_string(k) + ") gamma = n/2");
        o.expect(is_ld_set(inst.graph, us), "{u_i} is an LD-set");
        o.notes << " tight-subcubic:" << k << " gamma=" << gamma;
    }
    auto t10 = generate(FamilySpec::tight_cubic10());
    const int gamma = ld_number_exact(t10.graph).value;
    o.expect(gamma == 5, "TightCubic10 gamma = 5");
    o.expect(is_ld_set(t10.graph, VertexSet::from_vector(10, {1, 2, 4, 6, 8})), "{1,2,4,6,8} is an LD-set");
    o.notes << " tight-cubic10 gamma=" << gamma;
}

// Smallest |S ∩ (V(G_i) - u)| over sets that dominate and separate the
// vertices of the gadget other than u, whatever happens outside the gadget.
int gadget_lower_bound(const Graph& g, int u) {
    const int n = g.order();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.insert(v);
        const int inside = s.size() - (s.contains(u) ? 1 : 0);
        if (inside >= best) continue;
        bool ok = true;
        std::vector<VertexSet> codes;
        for (int v = 0; v < n && ok; ++v) {
            if (v == u || s.contains(v)) continue;
            VertexSet code = iset(g, s, v);
            if (code.empty()) ok = false;
            for (const auto& c : codes)
                if (c == code) ok = false;
            codes.push_back(code);
        }
        if (ok) best = inside;
    }
    return best;
}

void criterion4(Outcome& o) {
    auto d1 = generate(FamilySpec::deg1_twins(1));
    const int g1 = ld_number_exact(d1.graph).value;
    o.expect(g1 == 7 && 12 * g1 == 7 * d1.graph.order(), "Deg1Twins(1) gamma = 7 = 7n/12");

    auto cr = generate(FamilySpec::closed_reg(4, 1));
    const int g2 = ld_number_exact(cr.graph).value;
    o.expect(g2 == 8 && 15 * g2 == 8 * cr.graph.order(), "ClosedReg(4,1) gamma = 8 = 8n/15");

    auto d2 = generate(FamilySpec::deg2_twins(1));
    o.expect(d2.graph.order() == 60, "Deg2Twins(1) has 60 vertices");
    o.expect(d2.witness.size() == 32 && is_ld_set(d2.graph, d2.witness), "Deg2Twins(1) witness of size 32");

    auto gadget = deg2_twins_gadget();
    const int lb = gadget_lower_bound(gadget.graph, 0);
    o.expect(lb >= 6, "gadget lower bound >= 6");
    o.notes << " deg1=" << g1 << " closed-reg=" << g2 << " gadget-lb=" << lb;

    SolverBudget budget;
    budget.max_seconds = kDeg2SolveSeconds;
    try {
        auto r = ld_number_exact(d2.graph, budget);
        o.notes << " deg2-exact=" << r.value << " (" << r.nodes << " nodes)";
        o.expect(r.value == 32, "Deg2Twins(1) exact value 32");
    } catch (const BudgetExceeded& e) {
        o.notes << " deg2-exact: budget exhausted, bounds " << e.lower_bound << ".." << e.upper_bound;
    }
}

void criterion5(Outcome& o) {
    int graphs = 0, fallbacks = 0;
    for (int n = 2; n <= 10; ++n) {
        EnumFilter f;
        f.order = n;
        f.hypotheses_only = true;
        for (const auto& g : enumerate_graphs(f)) {
            ++graphs;
            const std::string name = to_graph6(g);
            auto cert = construct_half_ld(g);
            o.expect(is_ld_set(g, cert.witness), "construct gives an LD-set on " + name);
            o.expect(cert.witness.size() <= n / 2, "construct size <= n/2 on " + name);
            o.expect(replay_certificate(g, cert) == cert.witness, "trace replays on " + name);
            for (const auto& rule : cert.fallback_rules()) {
                ++fallbacks;
                o.expect(rule == "P6-C4free", "fallback " + rule + " on " + name);
            }
            o.expect(ld_number_exact(g).value <= n / 2, "exact gamma <= n/2 on " + name);
        }
    }
    o.notes << " graphs=" << graphs << " P6-C4free-steps=" << fallbacks;
}

void criterion6(Outcome& o) {
    auto k33 = generate(FamilySpec::k33()).graph;
    int graphs = 0;
    for (int n : {6, 8, 10}) {
        EnumFilter f;
        f.order = n;
        f.regular_degree = 3;
        auto rep = sweep_conjecture(f, 0);
        for (const auto& r : rep.records) {
            ++graphs;
            Graph g = parse_graph6(r.graph6);
            const bool is_k33 = n == 6 && triangles(g).empty();
            if (is_k33) continue;
            o.expect(2 * r.gamma <= n, "gamma <= n/2 on " + r.graph6);
        }
    }
    const int k33_gamma = naive_ld_number(k33).value;
    o.expect(k33_gamma == 4, "gamma(K3,3) = 4 by subset enumeration");

    EnumFilter tf;
    tf.order = 10;
    tf.regular_degree = 3;
    tf.twin_free_only = true;
    auto rep = sweep_conjecture(tf, 0);
    int max_gamma = 0;
    for (const auto& r : rep.records) max_gamma = std::max(max_gamma, r.gamma);
    o.expect(rep.tight == 0, "no tight twin-free cubic graph on 10 vertices");
    o.notes << " cubic-graphs=" << graphs << " K33=" << k33_gamma << " twin-free-n10=" << rep.graphs
            << " tight=" << rep.tight << " max-gamma=" << max_gamma;
}

void criterion7(Outcome& o) {
    struct Case {
        FamilySpec spec;
        std::vector<std::string> set;
        bool strict;  // |S| < n/2 rather than |S| = n/2
    };
    const std::vector<Case> cases{
        {FamilySpec::f3_prime(), {"v", "z"}, true},
        {FamilySpec::f_graph(3), {"x'", "v", "z"}, false},
        {FamilySpec::f_graph(4), {"v", "w", "x", "y"}, false},
        {FamilySpec::f_graph(5), {"v", "x'", "y"}, true},
        {FamilySpec::f_graph(6), {"u", "x", "y", "z"}, false},
    };
    for (const auto& c : cases) {
        auto inst = generate(c.spec);
        const int n = inst.graph.order();
        VertexSet s(n);
        for (const auto& l : c.set) s.insert(inst.vertex(l));
        const std::string name = c.spec.to_string();
        o.expect(is_ld_set(inst.graph, s), name + " set is an LD-set");
        o.expect(c.strict ? 2 * s.size() < n : 2 * s.size() == n, name + " size against n/2");
        o.notes << " " << name << ":" << s.size() << "/" << n;
    }
}

void criterion8(Outcome& o) {
    auto comb = generate(FamilySpec::ltd_comb(4));
    const int n = comb.graph.order();
    const int ltd = ltd_number_exact(comb.graph).value;
    o.expect(n == 12 && ltd == 8 && 3 * ltd == 2 * n, "comb(4) LTD = 8 = 2n/3");
    o.expect(2 * ltd > n, "LTD exceeds n/2");
    o.expect(comb.graph.max_degree() <= 3, "comb is subcubic");
    o.notes << " n=" << n << " ltd=" << ltd;
}

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
    for (int s : leaves_and_supports(g).supports) {
        int count = 0;
        for (int w : g.neighbours(s)) count += g.degree(w) == 1;
        if (count > 1) return true;
    }
    return false;
}

void criterion9(Outcome& o) {
    EnumFilter all;
    all.order = 10;
    auto graphs = enumerate_graphs_up_to(all);

    // Normalization on random (graph, LD-set) pairs.
    std::vector<const Graph*> pool;
    for (const auto& g : graphs)
        if (g.order() >= 3 && g.order() <= 9) pool.push_back(&g);
    std::mt19937 rng(20240615);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int pairs = 0, leaves_out = 0;
    while (pairs < kNormalizationPairs) {
        const Graph& g = *pool[pick(rng)];
        const VertexSet s = random_ld_set(g, rng);
        ++pairs;
        VertexSet in = normalize_supports_in(g, s);
        o.expect(is_ld_set(g, in) && in.size() <= s.size(), "supports-in keeps an LD-set of no larger size");
        if (support_with_two_leaves(g)) continue;
        ++leaves_out;
        VertexSet out = normalize_leaves_out(g, s);
        bool no_leaf = true;
        for (int leaf : leaves_and_supports(g).leaves) no_leaf = no_leaf && !out.contains(leaf);
        o.expect(is_ld_set(g, out) && out.size() <= s.size() && no_leaf,
                 "leaves-out keeps an LD-set of no larger size without leaves");
    }

    // Slater bound on every instance solved here.
    int solved = 0, lemmas = 0;
    for (const auto& g : graphs) {
        if (g.order() <= 9) {
            ++solved;
            const int gamma = ld_number_exact(g).value;
            o.expect(gamma >= subcubic_lower_bound(g), "ceil(n/3) <= gamma on " + to_graph6(g));
        }
        if (is_twin_free(g)) {
            ++lemmas;
            o.expect(check_structure_lemmas(g).all_hold(), "structure lemmas on " + to_graph6(g));
        }
        o.expect(parse_graph6(to_graph6(g)) == g, "graph6 round trip on " + to_graph6(g));
    }
    o.notes << " pairs=" << pairs << " (leaves-out " << leaves_out << ") slater=" << solved
            << " twin-free=" << lemmas << " round-trips=" << graphs.size();
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "small-graph exact values", kBudget1, criterion1},
        {2, "exact solver matches subset enumeration (n <= 8)", kBudget2, criterion2},
        {3, "tight families", kBudget3, criterion3},
        {4, "counterexample families", kBudget4, criterion4},
        {5, "constructive bound on all hypothesis graphs (n <= 10)", kBudget5, criterion5},
        {6, "cubic sweep (n = 6, 8, 10)", kBudget6, criterion6},
        {7, "F-graph witnesses", kBudget7, criterion7},
        {8, "LTD comb", kBudget8, criterion8},
        {9, "property suites", kBudget9, criterion9},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget) {
            o.ok = false;
            o.notes << " [over time budget " << c.budget << " s]";
        }
        failed += !o.ok;
        std::printf("%s %d %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.notes.str().c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
