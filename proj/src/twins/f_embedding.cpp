#include "locdom/f_embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

struct PatternSpec {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> extra_edges;
    std::vector<std::string> pinned;
};

FPattern build(int index, const PatternSpec& spec) {
    FPattern p;
    p.index = index;
    p.labels = spec.labels;
    p.default_u = spec.pinned;
    std::vector<Edge> es;
    for (const char* a : {"u", "v"})
        for (const char* b : {"x", "y", "z"}) es.emplace_back(p.vertex(a), p.vertex(b));
    for (const auto& [a, b] : spec.extra_edges) es.emplace_back(p.vertex(a), p.vertex(b));
    p.graph = Graph::from_edges(static_cast<int>(p.labels.size()), es);
    return p;
}

std::vector<FPattern> make_patterns() {
    const std::vector<std::string> six{"u", "v", "w", "x", "y", "z"};
    const std::vector<std::string> five{"u", "v", "x", "y", "z"};
    std::vector<PatternSpec> specs{
        {{"u", "v", "x", "y", "z"}, {}, {"u", "v"}},
        {{"u", "v", "w", "w'", "x", "y", "z"}, {{"y", "w"}, {"z", "w"}, {"w", "w'"}}, six},
        {{"u", "v", "x", "y", "y'", "z", "z'"}, {{"y", "y'"}, {"z", "z'"}}, five},
        {{"u", "v", "x", "x'", "y", "z"}, {{"y", "z"}, {"x", "x'"}}, five},
        {{"u", "v", "w", "w'", "x", "x'", "y", "z"},
         {{"w", "y"}, {"w", "z"}, {"w", "w'"}, {"x", "x'"}},
         six},
        {{"u", "v", "w", "x", "x'", "y", "z"},
         {{"w", "y"}, {"w", "z"}, {"x", "x'"}, {"w", "x'"}},
         six},
        {{"u", "v", "x", "x'", "y", "y'", "z", "z'"}, {{"x", "x'"}, {"y", "y'"}, {"z", "z'"}}, five},
    };
    std::vector<FPattern> out;
    for (int i = 0; i < static_cast<int>(specs.size()); ++i) out.push_back(build(i, specs[i]));
    return out;
}

}  // namespace

int FPattern::vertex(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(ErrorCode::BadParameter, "pattern has no vertex " + label);
    return static_cast<int>(it - labels.begin());
}

int FEmbedding::at(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(ErrorCode::BadParameter, "embedding has no vertex " + label);
    return image[it - labels.begin()];
}

const FPattern& f_pattern(int index) {
    static const std::vector<FPattern> patterns = make_patterns();
    if (index < 0 || index >= static_cast<int>(patterns.size()))
        throw Error(ErrorCode::BadParameter, "pattern index must be in 0..6");
    return patterns[index];
}

namespace {

void search_embeddings(const Graph& g, int index,
                       const std::optional<std::vector<std::string>>& pinned_override,
                       const std::function<bool(const FEmbedding&)>& emit) {
    const FPattern& p = f_pattern(index);
    const int k = p.graph.order();
    std::vector<std::string> pinned = pinned_override ? *pinned_override : p.default_u;
    std::vector<bool> is_pinned(k, false);
    for (const auto& l : pinned) is_pinned[p.vertex(l)] = true;
    const int iu = p.vertex("u");
    const int iv = p.vertex("v");
    const bool twin_anchor = is_pinned[iu] && is_pinned[iv];

    std::vector<int> image(k, -1);
    std::vector<bool> used(g.order(), false);
    bool stop = false;

    std::function<void(int)> rec = [&](int i) {
        if (stop) return;
        if (i == k) {
            FEmbedding e{index, p.labels, image, pinned};
            if (emit(e)) stop = true;
            return;
        }
        const int need = p.graph.degree(i);
        for (int c = 0; c < g.order() && !stop; ++c) {
            if (used[c]) continue;
            int dc = g.degree(c);
            if (dc < need || (is_pinned[i] && dc != need)) continue;
            if (twin_anchor && i == iv && g.neighbours(c) != g.neighbours(image[iu])) continue;
            bool ok = true;
            for (int j : p.graph.neighbours(i))
                if (j < i && !g.has_edge(c, image[j])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[i] = c;
            used[c] = true;
            rec(i + 1);
            used[c] = false;
            image[i] = -1;
        }
    };
    rec(0);
}

}  // namespace

std::optional<FEmbedding> find_f_embedding(const Graph& g, int index,
                                           const std::optional<std::vector<std::string>>& pinned) {
    std::optional<FEmbedding> found;
    search_embeddings(g, index, pinned, [&](const FEmbedding& e) {
        found = e;
        return true;
    });
    return found;
}

std::vector<FEmbedding> all_f_embeddings(const Graph& g, int index,
                                         const std::optional<std::vector<std::string>>& pinned) {
    std::vector<FEmbedding> out;
    search_embeddings(g, index, pinned, [&](const FEmbedding& e) {
        out.push_back(e);
        return false;
    });
    return out;
}

bool is_valid_f_embedding(const Graph& g, const FEmbedding& e) {
    const FPattern& p = f_pattern(e.pattern);
    if (e.image.size() != p.labels.size() || e.labels != p.labels) return false;
    std::map<int, int> preimage;
    for (std::size_t i = 0; i < e.image.size(); ++i) {
        int c = e.image[i];
        if (c < 0 || c >= g.order()) return false;
        if (!preimage.emplace(c, static_cast<int>(i)).second) return false;
    }
    for (auto [a, b] : p.graph.edges())
        if (!g.has_edge(e.image[a], e.image[b])) return false;
    for (const auto& l : e.pinned) {
        int i = p.vertex(l);
        for (int y : g.neighbours(e.image[i])) {
            auto it = preimage.find(y);
            if (it == preimage.end() || !p.graph.has_edge(i, it->second)) return false;
        }
    }
    return true;
}

}  // namespace locdom
