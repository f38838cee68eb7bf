#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "locdom/enumerate.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/twins.hpp"

namespace locdom {

int default_thread_count() {
    if (const char* env = std::getenv("LOCDOM_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

namespace {

SweepRecord sweep_one(const Graph& g, const SolverBudget& budget) {
    SweepRecord r;
    r.graph6 = to_graph6(g);
    r.order = g.order();
    r.size = g.edge_count();
    auto tw = twin_report(g);
    std::set<int> degs;
    for (const auto& p : tw.open) degs.insert(p.degree);
    r.open_twin_degrees.assign(degs.begin(), degs.end());
    if (tw.open.empty() && tw.closed.empty()) r.twin_class = "twin-free";
    else if (tw.closed.empty()) r.twin_class = "open";
    else if (tw.open.empty()) r.twin_class = "closed";
    else r.twin_class = "open+closed";
    r.hypotheses_hold = satisfies_bound_hypotheses(g);
    auto res = ld_number_exact(g, budget);
    r.gamma = res.value;
    r.witness = res.witness;
    r.tight = 2 * r.gamma == r.order;
    r.violation = r.hypotheses_hold && r.gamma > r.order / 2;
    return r;
}

}  // namespace

SweepReport sweep_conjecture(const EnumFilter& filter, int threads, const SolverBudget& budget) {
    SweepReport rep = sweep_graphs(enumerate_graphs(filter), threads, budget);
    rep.filter = filter;
    return rep;
}

SweepReport sweep_graphs(const std::vector<Graph>& graphs, int threads, const SolverBudget& budget) {
    SweepReport rep;
    rep.records.resize(graphs.size());
    if (threads <= 0) threads = default_thread_count();
    threads = std::max(1, std::min<int>(threads, static_cast<int>(graphs.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            try {
                rep.records[i] = sweep_one(graphs[i], budget);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = graphs.size();
                return;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    rep.graphs = static_cast<int>(graphs.size());
    for (const auto& r : rep.records) {
        if (!r.hypotheses_hold) {
            ++rep.exempt;
            continue;
        }
        if (r.order > 0) rep.max_ratio = std::max(rep.max_ratio, double(r.gamma) / r.order);
        if (r.tight) {
            ++rep.tight;
            rep.tight_graphs.push_back(r.graph6);
        }
        if (r.violation) {
            ++rep.violations;
            rep.violation_graphs.push_back(r.graph6);
        }
    }
    return rep;
}

}  // namespace locdom
