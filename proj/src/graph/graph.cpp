#include "locdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "locdom/errors.hpp"

namespace locdom {

Graph::Graph(int n) {
    if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative order");
    adj_.resize(n);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) +
                                                    " outside 0.." + std::to_string(order() - 1));
}

void Graph::add_edge_unchecked(int u, int v) {
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    }
    for (auto [u, v] : edges) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const noexcept {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const noexcept {
    if (adj_.empty()) return 0;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

const std::vector<int>& Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

VertexSet Graph::open_neighbourhood(int v) const {
    check_vertex(v);
    VertexSet s(order());
    for (int w : adj_[v]) s.insert(w);
    return s;
}

VertexSet Graph::closed_neighbourhood(int v) const {
    VertexSet s = open_neighbourhood(v);
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::validate() const {
    long long half = 0;
    for (int u = 0; u < order(); ++u) {
        const auto& a = adj_[u];
        for (std::size_t i = 0; i < a.size(); ++i) {
            int v = a[i];
            if (v < 0 || v >= order()) throw Error(ErrorCode::IndexOutOfRange, "bad neighbour");
            if (v == u) throw Error(ErrorCode::LoopEdge, "loop in adjacency");
            if (i > 0 && a[i - 1] >= v)
                throw Error(ErrorCode::MalformedEdgeList, "adjacency not strictly sorted");
            if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                throw Error(ErrorCode::MalformedEdgeList, "asymmetric adjacency");
        }
        half += static_cast<long long>(a.size());
    }
    if (half != 2LL * m_) throw Error(ErrorCode::MalformedEdgeList, "edge count mismatch");
}

VertexSet VertexMapping::lift(const VertexSet& s) const {
    VertexSet out(static_cast<int>(old_to_new.size()));
    for (int v : s) out.insert(new_to_old.at(v));
    return out;
}

VertexSet VertexMapping::restrict(const VertexSet& s) const {
    VertexSet out(static_cast<int>(new_to_old.size()));
    for (int v : s)
        if (old_to_new.at(v) >= 0) out.insert(old_to_new[v]);
    return out;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
    for (auto [u, v] : edges) {
        if (u == v || !g.has_edge(u, v))
            throw Error(ErrorCode::EdgeNotPresent,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    }
    std::set<Edge> drop;
    for (auto [u, v] : edges) drop.insert(std::minmax(u, v));
    std::vector<Edge> kept;
    for (auto e : g.edges())
        if (!drop.count(e)) kept.push_back(e);
    return Graph::from_edges(g.order(), kept);
}

Graph remove_edges(const Graph& g, std::initializer_list<Edge> edges) {
    return remove_edges(g, std::span<const Edge>(edges.begin(), edges.size()));
}

std::pair<Graph, VertexMapping> induced_subgraph(const Graph& g, const VertexSet& kept) {
    if (kept.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex set universe does not match graph order");
    VertexMapping map;
    map.old_to_new.assign(g.order(), -1);
    for (int v : kept) {
        map.old_to_new[v] = static_cast<int>(map.new_to_old.size());
        map.new_to_old.push_back(v);
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (map.old_to_new[u] >= 0 && map.old_to_new[v] >= 0)
            es.emplace_back(map.old_to_new[u], map.old_to_new[v]);
    return {Graph::from_edges(static_cast<int>(map.new_to_old.size()), es), std::move(map)};
}

std::pair<Graph, VertexMapping> remove_vertices(const Graph& g, const VertexSet& removed) {
    if (removed.universe() != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex set universe does not match graph order");
    return induced_subgraph(g, VertexSet::full(g.order()) - removed);
}

std::pair<Graph, VertexMapping> remove_vertices(const Graph& g, std::initializer_list<int> removed) {
    return remove_vertices(g, VertexSet(g.order(), removed));
}

Graph relabel(const Graph& g, const std::vector<int>& new_of_old) {
    if (static_cast<int>(new_of_old.size()) != g.order())
        throw Error(ErrorCode::IndexOutOfRange, "permutation length does not match graph order");
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(new_of_old[u], new_of_old[v]);
    return Graph::from_edges(g.order(), es);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> q{source};
    dist.at(source) = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbours(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp(g.order());
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (int w : g.neighbours(u))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_subcubic(const Graph& g) { return g.max_degree() <= 3; }

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

bool is_cubic(const Graph& g) { return is_regular(g, 3); }

}  // namespace locdom
