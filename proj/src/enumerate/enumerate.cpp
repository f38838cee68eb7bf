#include "locdom/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "locdom/canonical.hpp"
#include "locdom/errors.hpp"
#include "locdom/twins.hpp"

namespace locdom {

namespace {

// Connected graphs of order n with maximum degree <= d, canonical and sorted.
// With `regular` set, only d-regular results are produced at this level and
// the level is not cached.
std::vector<Graph> connected_level(int n, int d, std::map<int, std::vector<Graph>>& cache,
                                   bool regular = false) {
    if (!regular)
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph(1));
    } else if (n > 1) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> found;
        for (const Graph& base : connected_level(n - 1, d, cache)) {
            std::vector<int> spare;
            bool usable = true;
            for (int v = 0; v < base.order(); ++v)
                if (base.degree(v) < d) {
                    spare.push_back(v);
                    usable &= !regular || base.degree(v) == d - 1;
                }
            const int s = static_cast<int>(spare.size());
            if (regular && (!usable || s != d)) continue;
            const int k_min = regular ? d : 1;
            const int k_max = std::min(d, s);
            // Nonempty subsets of spare vertices of size at most d.
            std::vector<int> pick;
            auto visit = [&](const std::vector<int>& chosen) {
                std::vector<Edge> es = base.edges();
                for (int v : chosen) es.emplace_back(v, n - 1);
                Graph h = Graph::from_edges(n, es);
                auto c = canonical_labelling(h);
                if (seen.insert(c.form).second) found.emplace_back(c.form, std::move(c.graph));
            };
            for (int k = k_min; k <= k_max; ++k) {
                std::vector<int> idx(k);
                for (int i = 0; i < k; ++i) idx[i] = i;
                while (true) {
                    pick.clear();
                    for (int i : idx) pick.push_back(spare[i]);
                    visit(pick);
                    int i = k - 1;
                    while (i >= 0 && idx[i] == s - k + i) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& f : found) out.push_back(std::move(f.second));
    }
    if (regular) {
        std::vector<Graph> reg;
        for (auto& g : out)
            if (is_regular(g, d)) reg.push_back(std::move(g));
        return reg;
    }
    cache[n] = out;
    return out;
}

bool keep(const Graph& g, const EnumFilter& f) {
    if (f.regular_degree && !is_regular(g, *f.regular_degree)) return false;
    if (f.twin_free_only && !is_twin_free(g)) return false;
    if (f.hypotheses_only && !satisfies_bound_hypotheses(g)) return false;
    return true;
}

void check_filter(const EnumFilter& f) {
    if (f.order < 1) throw Error(ErrorCode::BadParameter, "order must be at least 1");
    if (f.order > kMaxCanonicalOrder)
        throw Error(ErrorCode::OrderTooLarge, "enumeration supports at most 16 vertices");
    if (f.max_degree < 0 || f.max_degree > 3)
        throw Error(ErrorCode::BadParameter, "max degree must be in 0..3");
    if (f.regular_degree && *f.regular_degree < 0)
        throw Error(ErrorCode::BadParameter, "regular degree must be non-negative");
    if (f.regular_degree && *f.regular_degree > f.max_degree)
        throw Error(ErrorCode::BadParameter, "regular degree exceeds the maximum degree");
}

}  // namespace

std::vector<Graph> enumerate_graphs(const EnumFilter& filter) {
    check_filter(filter);
    std::map<int, std::vector<Graph>> cache;
    std::vector<Graph> out;
    const bool regular = filter.regular_degree && *filter.regular_degree == filter.max_degree;
    for (const Graph& g : connected_level(filter.order, filter.max_degree, cache, regular))
        if (keep(g, filter)) out.push_back(g);
    return out;
}

std::vector<Graph> enumerate_graphs_up_to(const EnumFilter& filter) {
    check_filter(filter);
    std::map<int, std::vector<Graph>> cache;
    std::vector<Graph> out;
    for (int n = 1; n <= filter.order; ++n)
        for (const Graph& g : connected_level(n, filter.max_degree, cache))
            if (keep(g, filter)) out.push_back(g);
    return out;
}

}  // namespace locdom
