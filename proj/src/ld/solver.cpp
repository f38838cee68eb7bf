#include "locdom/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>

#include "locdom/errors.hpp"
#include "locdom/ld.hpp"

namespace locdom {

namespace {

// Constraint sets over vertex indices; a set S is feasible iff it meets each.
using ConstraintList = std::vector<std::vector<int>>;

ConstraintList ld_constraints(const Graph& g) {
    ConstraintList out;
    const int n = g.order();
    for (int x = 0; x < n; ++x) out.push_back(g.closed_neighbourhood(x).to_vector());
    for (int x = 0; x < n; ++x) {
        auto dist = bfs_distances(g, x);
        auto nx = g.closed_neighbourhood(x);
        for (int y = x + 1; y < n; ++y) {
            if (dist[y] < 0 || dist[y] > 2) continue;
            auto ny = g.closed_neighbourhood(y);
            auto c = (nx - ny) | (ny - nx);
            c.insert(x);
            c.insert(y);
            out.push_back(c.to_vector());
        }
    }
    return out;
}

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1U; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool meets(const Bits& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    Bits minus(const Bits& o) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    Bits& operator|=(const Bits& o) {
        for (int i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    int first() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
};

class Clock {
public:
    explicit Clock(const SolverBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Returns true once the budget is exhausted.
    bool tick() {
        ++nodes;
        if (budget_.max_nodes >= 0 && nodes > budget_.max_nodes) return true;
        if (budget_.max_seconds >= 0 && (nodes & 1023) == 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > budget_.max_seconds) return true;
        }
        return false;
    }

    long long nodes = 0;

private:
    SolverBudget budget_;
    std::chrono::steady_clock::time_point start_;
};

struct OutOfBudget {};

template <int W>
class HittingSetSearch {
public:
    HittingSetSearch(int n, const ConstraintList& raw, Clock& clock) : n_(n), clock_(clock) {
        std::vector<Bits<W>> all;
        for (const auto& c : raw) {
            Bits<W> b;
            for (int v : c) b.set(v);
            all.push_back(b);
        }
        std::stable_sort(all.begin(), all.end(),
                         [](const Bits<W>& a, const Bits<W>& b) { return a.count() < b.count(); });
        for (const auto& c : all) {
            bool dominated = false;
            for (const auto& k : cons_)
                if (k.subset_of(c)) {
                    dominated = true;
                    break;
                }
            if (!dominated) cons_.push_back(c);
        }
        scratch_.resize(n + 2);
    }

    int constraint_count() const { return static_cast<int>(cons_.size()); }

    // Looks for a hitting set of size <= k containing `in` and avoiding `out`.
    bool feasible(const Bits<W>& in, const Bits<W>& out, int k, Bits<W>& found) {
        return search(in, out, in.count(), k, found, 0);
    }

    int root_packing_bound() {
        Bits<W> none;
        return packing(none, none, scratch_[0]);
    }

    Bits<W> greedy_cover() const {
        Bits<W> in;
        while (true) {
            std::vector<int> hits(n_, 0);
            bool open = false;
            for (const auto& c : cons_) {
                if (c.meets(in)) continue;
                open = true;
                for (int v = 0; v < n_; ++v)
                    if (c.test(v)) ++hits[v];
            }
            if (!open) return in;
            int best = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());
            in.set(best);
        }
    }

private:
    struct Open {
        int index;
        int avail;
    };

    int packing(const Bits<W>& in, const Bits<W>& out, std::vector<Open>& open) {
        open.clear();
        for (int i = 0; i < static_cast<int>(cons_.size()); ++i) {
            if (cons_[i].meets(in)) continue;
            open.push_back({i, cons_[i].minus(out).count()});
        }
        return greedy_pack(out, open);
    }

    int greedy_pack(const Bits<W>& out, std::vector<Open>& open) {
        std::stable_sort(open.begin(), open.end(),
                         [](const Open& a, const Open& b) { return a.avail < b.avail; });
        Bits<W> used;
        int lb = 0;
        for (const auto& o : open) {
            auto a = cons_[o.index].minus(out);
            if (!a.meets(used)) {
                ++lb;
                used |= a;
            }
        }
        return lb;
    }

    bool search(Bits<W> in, Bits<W> out, int cnt, int k, Bits<W>& found, int depth) {
        if (clock_.tick()) throw OutOfBudget{};
        if (cnt > k) return false;
        auto& open = scratch_[depth];
        open.clear();
        int best = -1;
        int best_avail = 1 << 30;
        for (int i = 0; i < static_cast<int>(cons_.size()); ++i) {
            const auto& c = cons_[i];
            if (c.meets(in)) continue;
            int a = c.minus(out).count();
            if (a == 0) return false;
            if (a < best_avail) {
                best_avail = a;
                best = i;
            }
            open.push_back({i, a});
        }
        if (best < 0) {
            found = in;
            return true;
        }
        if (cnt >= k) return false;
        if (best_avail > 1 && cnt + greedy_pack(out, open) > k) return false;

        auto cand = cons_[best].minus(out);
        for (int v = cand.first(); v >= 0; v = cand.first()) {
            Bits<W> in2 = in;
            in2.set(v);
            if (search(in2, out, cnt + 1, k, found, depth + 1)) return true;
            out.set(v);
            cand = cons_[best].minus(out);
        }
        return false;
    }

    int n_;
    Clock& clock_;
    std::vector<Bits<W>> cons_;
    std::vector<std::vector<Open>> scratch_;
};

template <int W>
VertexSet to_vertex_set(int n, const Bits<W>& b) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (b.test(v)) s.insert(v);
    return s;
}

template <int W>
SolveResult solve_with(int n, const ConstraintList& raw, int info_lb, const SolverBudget& budget) {
    Clock clock(budget);
    HittingSetSearch<W> hs(n, raw, clock);
    SolveResult res;
    int lb = std::max(info_lb, hs.root_packing_bound());
    res.lower_bound = lb;
    Bits<W> best = hs.greedy_cover();
    int ub = best.count();
    Bits<W> none;
    try {
        while (ub > lb) {
            Bits<W> found;
            if (!hs.feasible(none, none, ub - 1, found)) break;
            best = found;
            ub = found.count();
        }
        if (budget.lexmin_witness) {
            Bits<W> in, out;
            for (int v = 0; v < n; ++v) {
                if (best.test(v)) {
                    in.set(v);
                    continue;
                }
                Bits<W> trial = in;
                trial.set(v);
                Bits<W> found;
                if (hs.feasible(trial, out, ub, found)) {
                    best = found;
                    in = trial;
                } else {
                    out.set(v);
                }
            }
        }
    } catch (const OutOfBudget&) {
        throw BudgetExceeded(lb, ub, clock.nodes);
    }
    res.value = ub;
    res.witness = to_vertex_set(n, best);
    res.nodes = clock.nodes;
    return res;
}

SolveResult solve_hitting_set(int n, const ConstraintList& raw, int info_lb,
                              const SolverBudget& budget) {
    if (n == 0) return SolveResult{0, VertexSet(0), 0, 0};
    if (n <= 64) return solve_with<1>(n, raw, info_lb, budget);
    if (n <= 128) return solve_with<2>(n, raw, info_lb, budget);
    if (n <= 256) return solve_with<4>(n, raw, info_lb, budget);
    if (n <= 512) return solve_with<8>(n, raw, info_lb, budget);
    if (n <= 1024) return solve_with<16>(n, raw, info_lb, budget);
    throw Error(ErrorCode::OrderTooLarge, "exact solver supports at most 1024 vertices");
}

void require_no_isolated(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw Error(ErrorCode::IsolatedVertex,
                        "vertex " + std::to_string(v) + " has no neighbour");
}

}  // namespace

int degree_lower_bound(const Graph& g) {
    int d = g.max_degree();
    return (2 * g.order() + d + 2) / (d + 3);
}

int subcubic_lower_bound(const Graph& g) {
    if (!is_subcubic(g))
        throw Error(ErrorCode::NotSubcubic,
                    "maximum degree " + std::to_string(g.max_degree()) + " exceeds 3");
    return (g.order() + 2) / 3;
}

SolveResult ld_number_exact(const Graph& g, const SolverBudget& budget) {
    return solve_hitting_set(g.order(), ld_constraints(g), degree_lower_bound(g), budget);
}

SolveResult ltd_number_exact(const Graph& g, const SolverBudget& budget) {
    require_no_isolated(g);
    auto cons = ld_constraints(g);
    for (int x = 0; x < g.order(); ++x) cons.push_back(g.neighbours(x));
    return solve_hitting_set(g.order(), cons, degree_lower_bound(g), budget);
}

namespace {

template <typename Accept>
SolveResult naive_search(const Graph& g, Accept accept) {
    const int n = g.order();
    if (n > 20) throw Error(ErrorCode::OrderTooLarge, "naive search supports at most 20 vertices");
    SolveResult res;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            ++res.nodes;
            VertexSet s = VertexSet::from_vector(n, idx);
            if (accept(s)) {
                res.value = k;
                res.witness = s;
                return res;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw Error(ErrorCode::BadParameter, "no feasible set exists");
}

}  // namespace

SolveResult naive_ld_number(const Graph& g) {
    return naive_search(g, [&](const VertexSet& s) { return verify_ld(g, s).valid(); });
}

SolveResult naive_ltd_number(const Graph& g) {
    require_no_isolated(g);
    return naive_search(g, [&](const VertexSet& s) { return verify_ltd(g, s).valid(); });
}

}  // namespace locdom
