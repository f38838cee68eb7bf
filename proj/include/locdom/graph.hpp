#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locdom/vertex_set.hpp"

namespace locdom {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept sorted
// and duplicate-free; edges are normalised to (min, max).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept { return m_; }
    int edge_count() const noexcept { return m_; }

    int degree(int v) const;
    int max_degree() const noexcept;
    int min_degree() const noexcept;
    const std::vector<int>& neighbours(int v) const;
    bool has_edge(int u, int v) const;

    VertexSet open_neighbourhood(int v) const;
    VertexSet closed_neighbourhood(int v) const;

    // Sorted list of (u, v) with u < v.
    std::vector<Edge> edges() const;

    // Checks sorted adjacency, symmetry, absence of loops and the edge count.
    void validate() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v) const;
    void add_edge_unchecked(int u, int v);

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Relabelling produced by vertex deletion. Surviving vertices keep their
// relative order.
struct VertexMapping {
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;

    int to_new(int old_v) const { return old_to_new.at(old_v); }
    int to_old(int new_v) const { return new_to_old.at(new_v); }
    // Maps a set over the reduced graph back to the original universe.
    VertexSet lift(const VertexSet& s) const;
    // Restricts a set over the original universe to the surviving vertices.
    VertexSet restrict(const VertexSet& s) const;
};

Graph remove_edges(const Graph& g, std::span<const Edge> edges);
Graph remove_edges(const Graph& g, std::initializer_list<Edge> edges);
std::pair<Graph, VertexMapping> remove_vertices(const Graph& g, const VertexSet& removed);
std::pair<Graph, VertexMapping> remove_vertices(const Graph& g, std::initializer_list<int> removed);
std::pair<Graph, VertexMapping> induced_subgraph(const Graph& g, const VertexSet& kept);
// Returns the graph with vertex i of the result being perm[i] of g.
Graph relabel(const Graph& g, const std::vector<int>& new_of_old);

// Connected components ordered by their minimum vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_subcubic(const Graph& g);
bool is_cubic(const Graph& g);
bool is_regular(const Graph& g, int d);

// Shortest-path distances from a source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int source);

}  // namespace locdom
