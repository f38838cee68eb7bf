#pragma once

#include <random>
#include <vector>

#include "locdom/graph.hpp"

namespace testing_graphs {

using locdom::Edge;
using locdom::Graph;

inline Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

inline Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}

inline Graph k33() {
    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) es.emplace_back(i, j);
    return Graph::from_edges(6, es);
}

inline Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Random subcubic graph: edges are offered in random order and kept while
// both endpoints still have spare degree.
inline Graph random_subcubic(int n, double density, std::mt19937& rng) {
    std::vector<Edge> cand;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cand.emplace_back(i, j);
    std::shuffle(cand.begin(), cand.end(), rng);
    std::vector<int> deg(n, 0);
    std::vector<Edge> es;
    std::bernoulli_distribution keep(density);
    for (auto [u, v] : cand)
        if (deg[u] < 3 && deg[v] < 3 && keep(rng)) {
            es.emplace_back(u, v);
            ++deg[u];
            ++deg[v];
        }
    return Graph::from_edges(n, es);
}

}  // namespace testing_graphs
