#include "locdom/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "locdom/errors.hpp"
#include "locdom/graph_io.hpp"

namespace locdom {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonicaliser {
public:
    explicit Canonicaliser(const Graph& g) : g_(g), n_(g.order()) {
        adj_.assign(n_, std::vector<bool>(n_, false));
        for (auto [u, v] : g.edges()) adj_[u][v] = adj_[v][u] = true;
    }

    CanonicalLabelling run() {
        Cells cells;
        if (n_ > 0) {
            cells.emplace_back(n_);
            std::iota(cells[0].begin(), cells[0].end(), 0);
        }
        std::vector<int> prefix;
        search(cells, prefix);
        CanonicalLabelling out;
        out.form = best_cert_;
        out.new_of_old = best_lab_;
        out.graph = relabel(g_, best_lab_);
        return out;
    }

private:
    void refine(Cells& cells) const {
        std::vector<int> cell_of(n_);
        while (true) {
            for (int c = 0; c < static_cast<int>(cells.size()); ++c)
                for (int v : cells[c]) cell_of[v] = c;
            const int k = static_cast<int>(cells.size());
            Cells next;
            bool changed = false;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> sig;
                for (int v : cell) {
                    std::vector<int> counts(k, 0);
                    for (int w : g_.neighbours(v)) ++counts[cell_of[w]];
                    sig.emplace_back(std::move(counts), v);
                }
                std::stable_sort(sig.begin(), sig.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<int> group{sig[0].second};
                for (std::size_t i = 1; i < sig.size(); ++i) {
                    if (sig[i].first != sig[i - 1].first) {
                        next.push_back(std::move(group));
                        group.clear();
                        changed = true;
                    }
                    group.push_back(sig[i].second);
                }
                next.push_back(std::move(group));
            }
            cells = std::move(next);
            if (!changed) return;
        }
    }

    std::string certificate(const std::vector<int>& lab) const {
        std::vector<int> old_of_new(n_);
        for (int v = 0; v < n_; ++v) old_of_new[lab[v]] = v;
        std::string out;
        int acc = 0, count = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (adj_[old_of_new[i]][old_of_new[j]] ? 1 : 0);
                if (++count == 6) {
                    out.push_back(static_cast<char>(63 + acc));
                    acc = count = 0;
                }
            }
        if (count > 0) out.push_back(static_cast<char>(63 + (acc << (6 - count))));
        return out;
    }

    // Automorphism mapping vertex v to a^{-1}(b(v)) for leaf labellings a, b.
    std::vector<int> automorphism(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> a_inv(n_);
        for (int v = 0; v < n_; ++v) a_inv[a[v]] = v;
        std::vector<int> perm(n_);
        for (int v = 0; v < n_; ++v) perm[v] = a_inv[b[v]];
        return perm;
    }

    void leaf(const Cells& cells) {
        std::vector<int> lab(n_);
        for (int c = 0; c < static_cast<int>(cells.size()); ++c) lab[cells[c][0]] = c;
        std::string cert = certificate(lab);
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = best_cert_ = cert;
            first_lab_ = best_lab_ = lab;
            return;
        }
        if (cert == first_cert_) autos_.push_back(automorphism(first_lab_, lab));
        else if (cert == best_cert_) autos_.push_back(automorphism(best_lab_, lab));
        if (cert < best_cert_) {
            best_cert_ = cert;
            best_lab_ = lab;
        }
    }

    int find(std::vector<int>& parent, int x) const {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // Orbit representatives under the known automorphisms that fix `prefix`.
    std::vector<int> orbits(const std::vector<int>& prefix) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& p : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return p[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(parent, v), b = find(parent, p[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
        return parent;
    }

    void search(Cells cells, std::vector<int>& prefix) {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(),
                                   [](const std::vector<int>& c) { return c.size() > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
        const std::vector<int> cell = *target;
        std::vector<int> explored;
        for (int w : cell) {
            auto orb = orbits(prefix);
            bool seen = std::any_of(explored.begin(), explored.end(),
                                    [&](int e) { return orb[e] == orb[w]; });
            if (seen) continue;
            Cells next;
            next.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != ti) {
                    next.push_back(cells[c]);
                    continue;
                }
                next.push_back({w});
                std::vector<int> rest;
                for (int x : cell)
                    if (x != w) rest.push_back(x);
                next.push_back(std::move(rest));
            }
            prefix.push_back(w);
            search(std::move(next), prefix);
            prefix.pop_back();
            explored.push_back(w);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<bool>> adj_;
    bool have_first_ = false;
    std::string first_cert_, best_cert_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder)
        throw Error(ErrorCode::OrderTooLarge, "canonical form supports at most " +
                                                  std::to_string(kMaxCanonicalOrder) + " vertices");
    if (g.order() == 0) return {"?", {}, Graph(0)};
    auto c = Canonicaliser(g).run();
    std::string head = to_graph6(Graph(g.order()));
    c.form = head.substr(0, 1) + c.form;
    return c;
}

std::string canonical_form(const Graph& g) { return canonical_labelling(g).form; }

}  // namespace locdom
