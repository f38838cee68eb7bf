#include <optional>
#include <unordered_map>

#include "engine_internal.hpp"
#include "locdom/construct.hpp"
#include "locdom/errors.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/ld.hpp"
#include "locdom/normalize.hpp"
#include "locdom/solver.hpp"
#include "locdom/twins.hpp"

namespace locdom {

namespace detail {

Attempt direct_attempt(const Graph& g, std::string rule, std::initializer_list<int> set) {
    Attempt a;
    a.rule = std::move(rule);
    a.direct = true;
    a.direct_set = VertexSet(g.order(), set);
    return a;
}

Attempt reduce_attempt(const Graph& g, std::string rule, std::vector<Edge> edges,
                       std::vector<int> vertices, std::initializer_list<int> added) {
    Attempt a;
    a.rule = rule;
    a.removed_edges = std::move(edges);
    a.removed_vertices = std::move(vertices);
    Patch p{std::move(rule), VertexSet(g.order()), VertexSet(g.order(), added)};
    a.patches = [p](const VertexSet&) { return std::vector<Patch>{p}; };
    return a;
}

Patch make_patch(const Graph& g, std::string rule, std::initializer_list<int> removed,
                 std::initializer_list<int> added) {
    return Patch{std::move(rule), VertexSet(g.order(), removed), VertexSet(g.order(), added)};
}

int other_neighbour(const Graph& g, int x, std::initializer_list<int> exclude) {
    for (int w : g.neighbours(x)) {
        bool skip = false;
        for (int e : exclude) skip |= (w == e);
        if (!skip) return w;
    }
    return -1;
}

int leaf_of(const Graph& g, int support, int not_this) {
    for (int w : g.neighbours(support))
        if (w != not_this && g.degree(w) == 1) return w;
    return -1;
}

bool has_leaf(const Graph& g, int v) { return leaf_of(g, v) >= 0; }

bool same_neighbours(const Graph& g, int a, int b) { return g.neighbours(a) == g.neighbours(b); }

}  // namespace detail

namespace {

using detail::Attempt;
using detail::Patch;

struct Node {
    VertexSet witness;
    std::vector<CaseStep> steps;  // steps[0] is the root, depths relative to it
};

class Engine {
public:
    explicit Engine(const ConstructOptions& options) : options_(options) {}

    Node solve(const Graph& g) {
        std::string key;
        if (options_.memoize) {
            key = to_graph6(g);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        Node out = dispatch(g);
        if (options_.memoize) memo_.emplace(std::move(key), out);
        return out;
    }

private:
    Node dispatch(const Graph& g) {
        if (!satisfies_bound_hypotheses(g)) return exact_leaf(g, "FALLBACK-unclassified");
        if (g.order() <= options_.small_order || g.edge_count() <= options_.small_edges)
            return exact_leaf(g, "T8-small");
        std::vector<Attempt> attempts;
        if (!open_twins_of_degree(g, 3).empty()) {
            attempts = detail::thm8_attempts(g);
        } else if (!twin_report(g).closed.empty()) {
            attempts = detail::thm7_attempts(g);
        } else {
            if (triangles(g).empty() && four_cycles(g).empty()) return exact_leaf(g, "P6-C4free");
            attempts = detail::prop6_attempts(g);
        }
        for (const auto& a : attempts)
            if (auto node = run(g, a)) return std::move(*node);
        return exact_leaf(g, "FALLBACK-unclassified");
    }

    static bool acceptable(const Graph& g, const VertexSet& s) {
        return s.size() <= g.order() / 2 && is_ld_set(g, s);
    }

    static CaseStep base_step(const Graph& g, std::string rule) {
        CaseStep step;
        step.rule_id = std::move(rule);
        step.order = g.order();
        step.size = g.edge_count();
        step.patch_removed = VertexSet(g.order());
        step.patch_added = VertexSet(g.order());
        return step;
    }

    Node exact_leaf(const Graph& g, std::string rule) {
        CaseStep step = base_step(g, std::move(rule));
        step.patch_added = ld_number_exact(g).witness;
        step.witness_size = step.patch_added.size();
        Node node;
        node.witness = step.patch_added;
        node.steps.push_back(std::move(step));
        return node;
    }

    std::optional<Node> run(const Graph& g, const Attempt& a) {
        if (a.direct) {
            if (!acceptable(g, a.direct_set)) return std::nullopt;
            CaseStep step = base_step(g, a.rule);
            step.patch_added = a.direct_set;
            step.witness_size = a.direct_set.size();
            return Node{a.direct_set, {std::move(step)}};
        }
        Graph reduced = remove_edges(g, a.removed_edges);
        auto [rest, map] = remove_vertices(reduced, VertexSet::from_vector(g.order(), a.removed_vertices));
        VertexSet merged(g.order());
        std::vector<CaseStep> children;
        std::vector<std::pair<int, int>> sub_sizes;
        for (const VertexSet& comp : components(rest)) {
            auto [h, inner] = induced_subgraph(rest, comp);
            Node child = solve(h);
            sub_sizes.emplace_back(h.order(), child.witness.size());
            merged |= map.lift(inner.lift(normalize_child(h, child.witness)));
            for (auto& s : child.steps) children.push_back(s);
        }
        for (const Patch& p : a.patches(merged)) {
            VertexSet s = (merged - p.removed) | p.added;
            if (!acceptable(g, s)) continue;
            CaseStep step = base_step(g, p.rule);
            step.removed_edges = a.removed_edges;
            step.removed_vertices = a.removed_vertices;
            step.patch_removed = p.removed;
            step.patch_added = p.added;
            step.sub_sizes = sub_sizes;
            step.witness_size = s.size();
            Node node;
            node.witness = std::move(s);
            node.steps.push_back(std::move(step));
            for (auto& c : children) {
                node.steps.push_back(c);
                ++node.steps.back().depth;
            }
            return node;
        }
        return std::nullopt;
    }

    ConstructOptions options_;
    std::unordered_map<std::string, Node> memo_;
};

}  // namespace

VertexSet normalize_child(const Graph& g, const VertexSet& s) {
    if (g.order() < 3) return s;
    for (int sup : leaves_and_supports(g).supports)
        if (detail::leaf_of(g, sup, detail::leaf_of(g, sup)) >= 0) return normalize_supports_in(g, s);
    return normalize_leaves_out(g, s);
}

std::vector<std::string> LdCertificate::fallback_rules() const {
    std::vector<std::string> out;
    for (const auto& s : trace)
        if (is_fallback_rule(s.rule_id)) out.push_back(s.rule_id);
    return out;
}

LdCertificate construct_half_ld(const Graph& g, const ConstructOptions& options) {
    if (auto violation = bound_hypotheses_violation(g)) throw *violation;
    Engine engine(options);
    Node root = engine.solve(g);
    LdCertificate cert;
    cert.witness = std::move(root.witness);
    cert.trace = std::move(root.steps);
    cert.fallback_count = static_cast<int>(cert.fallback_rules().size());
    return cert;
}

LdCertificate construct_for_cubic(const Graph& g, const ConstructOptions& options) {
    if (!is_cubic(g)) {
        std::vector<int> witness;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != 3) {
                witness.push_back(v);
                break;
            }
        throw HypothesisViolated(Hypothesis::Cubic, witness, "graph is not cubic");
    }
    return construct_half_ld(g, options);
}

}  // namespace locdom
