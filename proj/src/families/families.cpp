#include "locdom/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "locdom/errors.hpp"
#include "locdom/f_embedding.hpp"

namespace locdom {

namespace {

class Builder {
public:
    int add(const std::string& label) {
        if (index_.count(label)) throw Error(ErrorCode::BadParameter, "duplicate label " + label);
        index_[label] = static_cast<int>(labels_.size());
        labels_.push_back(label);
        return index_[label];
    }
    int at(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw Error(ErrorCode::BadParameter, "unknown label " + label);
        return it->second;
    }
    void edge(const std::string& a, const std::string& b) { edges_.emplace_back(at(a), at(b)); }
    void edge(int a, int b) { edges_.emplace_back(a, b); }
    void mark(const std::string& label) { witness_.push_back(at(label)); }
    void mark(int v) { witness_.push_back(v); }

    FamilyInstance finish(const FamilySpec& spec, ClaimKind kind, int claimed) const {
        FamilyInstance inst;
        inst.spec = spec;
        inst.graph = Graph::from_edges(static_cast<int>(labels_.size()), edges_);
        inst.witness = VertexSet::from_vector(inst.graph.order(), witness_);
        inst.claim_kind = kind;
        inst.claimed = claimed;
        inst.labels = labels_;
        return inst;
    }
    FamilyInstance finish(const FamilySpec& spec, ClaimKind kind) const {
        return finish(spec, kind, static_cast<int>(witness_.size()));
    }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<int> witness_;
};

std::string sub(const std::string& base, int i) { return base + "_" + std::to_string(i); }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadParameter, what);
}

// Shaded spine positions of a path: 0-based indices congruent to 1 or 3 mod 5,
// plus the last vertex when the tail would otherwise be undominated or clash.
std::vector<int> path_pattern(int n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (i % 5 == 1 || i % 5 == 3) s.push_back(i);
    if (n % 5 == 1 || n % 5 == 3) s.push_back(n - 1);
    return s;
}

FamilyInstance ltd_comb(const FamilySpec& spec) {
    int p = spec.a;
    require(p >= 1, "comb spine length must be at least 1");
    Builder b;
    for (int i = 1; i <= p; ++i) {
        b.add(sub("v", i));
        b.add(sub("v'", i));
        b.add(sub("v''", i));
        b.edge(sub("v", i), sub("v'", i));
        b.edge(sub("v'", i), sub("v''", i));
        b.mark(sub("v'", i));
        b.mark(sub("v''", i));
        if (i > 1) b.edge(sub("v", i - 1), sub("v", i));
    }
    return b.finish(spec, ClaimKind::ExactLtd);
}

FamilyInstance deg1_twins(const FamilySpec& spec) {
    int k = spec.a;
    require(k >= 1, "k must be at least 1");
    Builder b;
    for (int i = 1; i <= 3 * k; ++i) {
        for (const char* base : {"v", "b", "a", "c"}) b.add(sub(base, i));
        b.edge(sub("b", i), sub("v", i));
        b.edge(sub("b", i), sub("a", i));
        b.edge(sub("b", i), sub("c", i));
        b.mark(sub("b", i));
        b.mark(sub("c", i));
        if (i > 1) b.edge(sub("v", i - 1), sub("v", i));
        if (i % 3 == 2) b.mark(sub("v", i));
    }
    return b.finish(spec, ClaimKind::ExactGamma);
}

// Gadget for spine index i: u_i with two branches; branch j has a branch
// vertex s, an open-twin pair t, t* of degree 2, their common neighbour w and
// a leaf l hanging from w.
void add_deg2_gadget(Builder& b, int i) {
    std::string u = sub("u", i);
    b.add(u);
    for (int j = 1; j <= 2; ++j) {
        std::string tag = std::to_string(j);
        std::string s = sub("s" + tag, i), t = sub("t" + tag, i), ts = sub("t*" + tag, i),
                    w = sub("w" + tag, i), l = sub("l" + tag, i);
        for (const auto& name : {s, t, ts, w, l}) b.add(name);
        b.edge(u, s);
        b.edge(s, t);
        b.edge(s, ts);
        b.edge(t, w);
        b.edge(ts, w);
        b.edge(w, l);
        b.mark(s);
        b.mark(t);
        b.mark(w);
    }
}

FamilyInstance deg2_twins(const FamilySpec& spec) {
    int k = spec.a;
    require(k >= 1, "k must be at least 1");
    Builder b;
    for (int i = 1; i <= 5 * k; ++i) {
        b.add(sub("v", i));
        add_deg2_gadget(b, i);
        b.edge(sub("v", i), sub("u", i));
        if (i > 1) b.edge(sub("v", i - 1), sub("v", i));
        if (i % 5 == 2 || i % 5 == 4) b.mark(sub("v", i));
    }
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance closed_reg(const FamilySpec& spec) {
    int r = spec.a, k = spec.b;
    require(r >= 4, "r must be at least 4");
    require(k >= 1, "k must be at least 1");
    Builder b;
    const int cliques = 3 * k;
    for (int i = 1; i <= cliques; ++i) {
        b.add(sub("a", i));
        b.add(sub("b", i));
        for (int j = 1; j <= r - 1; ++j) {
            std::string q = "q_" + std::to_string(i) + "," + std::to_string(j);
            b.add(q);
            b.edge(q, sub("a", i));
            b.edge(q, sub("b", i));
            for (int h = 1; h < j; ++h) b.edge(q, "q_" + std::to_string(i) + "," + std::to_string(h));
            if (j <= r - 2) b.mark(q);
        }
        if (i % 3 == 1) b.mark(sub("b", i));
        if (i % 3 == 0) b.mark(sub("a", i));
    }
    for (int i = 1; i <= cliques; ++i) b.edge(sub("b", i), sub("a", i % cliques + 1));
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance tight_subcubic(const FamilySpec& spec) {
    int k = spec.a;
    require(k >= 1, "k must be at least 1");
    Builder b;
    const int len = 4 * k + 1;
    for (int i = 1; i <= len; ++i) {
        b.add(sub("p", i));
        b.add(sub("u", i));
        b.edge(sub("p", i), sub("u", i));
        b.mark(sub("u", i));
        if (i > 1) b.edge(sub("p", i - 1), sub("p", i));
    }
    for (int i = 1; i < len; ++i)
        if (i % 4 == 2 || i % 4 == 3) b.edge(sub("u", i), sub("u", i + 1));
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance tight_cubic10(const FamilySpec& spec) {
    Builder b;
    for (int i = 0; i < 10; ++i) b.add(std::to_string(i));
    for (int i = 0; i < 10; ++i) b.edge(i, (i + 1) % 10);
    for (auto [x, y] : std::vector<Edge>{{0, 3}, {1, 8}, {2, 9}, {4, 6}, {5, 7}}) b.edge(x, y);
    for (int v : {1, 2, 4, 6, 8}) b.mark(v);
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance from_pattern(const FamilySpec& spec, int index, const std::string& dropped,
                            const std::vector<std::string>& witness) {
    const FPattern& p = f_pattern(index);
    Builder b;
    for (const auto& l : p.labels)
        if (l != dropped) b.add(l);
    for (auto [x, y] : p.graph.edges())
        if (p.labels[x] != dropped && p.labels[y] != dropped) b.edge(p.labels[x], p.labels[y]);
    for (const auto& l : witness) b.mark(l);
    return b.finish(spec, ClaimKind::UpperBoundWitness);
}

FamilyInstance f_graph(const FamilySpec& spec) {
    require(spec.a >= 0 && spec.a <= 6, "pattern index must be in 0..6");
    // Sets for the first two patterns come from the exact solver; the rest are
    // the sets used in the case analysis.
    static const std::vector<std::vector<std::string>> witnesses{
        {"u", "x", "y"},          {"u", "w", "y"},      {"v", "y", "z"},
        {"v", "x'", "z"},         {"v", "w", "x", "y"}, {"v", "x'", "y"},
        {"u", "x", "y", "z"},
    };
    return from_pattern(spec, spec.a, "", witnesses[spec.a]);
}

FamilyInstance prism(const FamilySpec& spec) {
    Builder b;
    for (const char* l : {"a", "b", "c", "a'", "b'", "c'"}) b.add(l);
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"a", "b"}, {"b", "c"}, {"a", "c"}, {"a'", "b'"}, {"b'", "c'"}, {"a'", "c'"},
             {"a", "a'"}, {"b", "b'"}, {"c", "c'"}})
        b.edge(x, y);
    for (const char* l : {"a", "b", "c"}) b.mark(l);
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance p2_box_c4(const FamilySpec& spec) {
    Builder b;
    const std::vector<std::string> inner{"a", "b", "c", "d"}, outer{"a'", "b'", "c'", "d'"};
    for (const auto& l : inner) b.add(l);
    for (const auto& l : outer) b.add(l);
    for (int i = 0; i < 4; ++i) {
        b.edge(inner[i], inner[(i + 1) % 4]);
        b.edge(outer[i], outer[(i + 1) % 4]);
        b.edge(inner[i], outer[i]);
    }
    // Lex-least optimal set found by the exact solver.
    for (const char* l : {"a", "b", "c", "d"}) b.mark(l);
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance path(const FamilySpec& spec) {
    int n = spec.a;
    require(n >= 1, "path order must be at least 1");
    Builder b;
    for (int i = 0; i < n; ++i) {
        b.add(std::to_string(i));
        if (i > 0) b.edge(i - 1, i);
    }
    for (int v : path_pattern(n)) b.mark(v);
    return b.finish(spec, ClaimKind::UpperBoundWitness);
}

FamilyInstance complete(const FamilySpec& spec) {
    int n = spec.a;
    require(n >= 2, "complete graph order must be at least 2");
    Builder b;
    for (int i = 0; i < n; ++i) {
        b.add(std::to_string(i));
        for (int j = 0; j < i; ++j) b.edge(j, i);
        if (i < n - 1) b.mark(i);
    }
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance star(const FamilySpec& spec) {
    int n = spec.a;
    require(n >= 2, "star order must be at least 2");
    Builder b;
    for (int i = 0; i < n; ++i) {
        b.add(std::to_string(i));
        if (i > 0) b.edge(0, i);
        if (i < n - 1) b.mark(i);
    }
    return b.finish(spec, ClaimKind::ExactGamma);
}

FamilyInstance k33(const FamilySpec& spec) {
    Builder b;
    for (int i = 0; i < 6; ++i) b.add(std::to_string(i));
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) b.edge(i, j);
    for (int v : {0, 1, 3, 4}) b.mark(v);
    return b.finish(spec, ClaimKind::ExactGamma);
}

struct NameEntry {
    const char* name;
    FamilyKind kind;
    int params;
};

const std::vector<NameEntry>& name_table() {
    static const std::vector<NameEntry> t{
        {"ltd-comb", FamilyKind::LtdComb, 1},
        {"deg1-twins", FamilyKind::Deg1Twins, 1},
        {"deg2-twins", FamilyKind::Deg2Twins, 1},
        {"closed-reg", FamilyKind::ClosedReg, 2},
        {"tight-subcubic", FamilyKind::TightSubcubic, 1},
        {"tight-cubic10", FamilyKind::TightCubic10, 0},
        {"f-graph", FamilyKind::FGraph, 1},
        {"f3-prime", FamilyKind::F3Prime, 0},
        {"prism", FamilyKind::Prism, 0},
        {"p2-box-c4", FamilyKind::P2BoxC4, 0},
        {"path", FamilyKind::Path, 1},
        {"complete", FamilyKind::CompleteK, 1},
        {"star", FamilyKind::StarK1, 1},
        {"k33", FamilyKind::CompleteBipartite33, 0},
    };
    return t;
}

}  // namespace

std::string FamilySpec::to_string() const {
    for (const auto& e : name_table())
        if (e.kind == kind) {
            std::string s = e.name;
            if (e.params >= 1) s += ":" + std::to_string(a);
            if (e.params >= 2) s += "," + std::to_string(b);
            return s;
        }
    return "?";
}

FamilySpec parse_family_spec(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            int v = 0;
            auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
                throw Error(ErrorCode::BadParameter, "bad family parameter '" + std::string(tok) + "'");
            params.push_back(v);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    for (const auto& e : name_table())
        if (name == e.name) {
            if (static_cast<int>(params.size()) != e.params)
                throw Error(ErrorCode::BadParameter, std::string(e.name) + " takes " +
                                                         std::to_string(e.params) + " parameter(s)");
            FamilySpec s{e.kind, 0, 0};
            if (e.params >= 1) s.a = params[0];
            if (e.params >= 2) s.b = params[1];
            return s;
        }
    throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& e : name_table()) out.emplace_back(e.name);
    return out;
}

std::string_view claim_kind_name(ClaimKind k) {
    switch (k) {
        case ClaimKind::ExactGamma: return "ExactGamma";
        case ClaimKind::UpperBoundWitness: return "UpperBoundWitness";
        case ClaimKind::ExactLtd: return "ExactLtd";
    }
    return "?";
}

int FamilyInstance::vertex(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(ErrorCode::BadParameter, "no vertex labelled " + label);
    return static_cast<int>(it - labels.begin());
}

FamilyInstance generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::LtdComb: return ltd_comb(spec);
        case FamilyKind::Deg1Twins: return deg1_twins(spec);
        case FamilyKind::Deg2Twins: return deg2_twins(spec);
        case FamilyKind::ClosedReg: return closed_reg(spec);
        case FamilyKind::TightSubcubic: return tight_subcubic(spec);
        case FamilyKind::TightCubic10: return tight_cubic10(spec);
        case FamilyKind::FGraph: return f_graph(spec);
        case FamilyKind::F3Prime: return from_pattern(spec, 3, "x'", {"v", "z"});
        case FamilyKind::Prism: return prism(spec);
        case FamilyKind::P2BoxC4: return p2_box_c4(spec);
        case FamilyKind::Path: return path(spec);
        case FamilyKind::CompleteK: return complete(spec);
        case FamilyKind::StarK1: return star(spec);
        case FamilyKind::CompleteBipartite33: return k33(spec);
    }
    throw Error(ErrorCode::BadParameter, "unknown family kind");
}

FamilyInstance deg2_twins_gadget() {
    Builder b;
    add_deg2_gadget(b, 1);
    return b.finish(FamilySpec::deg2_twins(1), ClaimKind::UpperBoundWitness);
}

}  // namespace locdom
