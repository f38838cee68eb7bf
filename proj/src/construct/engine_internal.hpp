#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom::detail {

// How the union S' of the reduced graph's sets becomes a set of G.
struct Patch {
    std::string rule;
    VertexSet removed;
    VertexSet added;
};

// One way of applying a case: either a fixed set for a fully determined graph
// (direct), or a reduction whose sub-solution is patched. Candidate patches
// are tried in order and the first verified one wins.
struct Attempt {
    std::string rule;
    bool direct = false;
    VertexSet direct_set;
    std::vector<Edge> removed_edges;
    std::vector<int> removed_vertices;
    std::function<std::vector<Patch>(const VertexSet&)> patches;
};

Attempt direct_attempt(const Graph& g, std::string rule, std::initializer_list<int> set);
Attempt reduce_attempt(const Graph& g, std::string rule, std::vector<Edge> edges,
                       std::vector<int> vertices, std::initializer_list<int> added = {});

Patch make_patch(const Graph& g, std::string rule, std::initializer_list<int> removed,
                 std::initializer_list<int> added);

// First neighbour of x outside `exclude`, or -1.
int other_neighbour(const Graph& g, int x, std::initializer_list<int> exclude);
// The neighbour of a leaf's support that is itself a leaf, other than `not_this`, or -1.
int leaf_of(const Graph& g, int support, int not_this = -1);
bool has_leaf(const Graph& g, int v);
bool same_neighbours(const Graph& g, int a, int b);

// Attempt lists in the order the corresponding argument considers them.
std::vector<Attempt> prop6_attempts(const Graph& g);
std::vector<Attempt> thm7_attempts(const Graph& g);
std::vector<Attempt> thm8_attempts(const Graph& g);

}  // namespace locdom::detail
