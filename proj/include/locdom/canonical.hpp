#pragma once

#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

struct CanonicalLabelling {
    std::string form;             // graph6 string of the canonical relabelling
    std::vector<int> new_of_old;  // vertex v of g becomes new_of_old[v]
    Graph graph;                  // relabelled graph
};

// Canonical labelling by colour refinement and individualisation, keeping the
// least graph6 string over all leaves (isomorphic inputs give equal forms).
// Throws OrderTooLarge above 16 vertices.
CanonicalLabelling canonical_labelling(const Graph& g);
std::string canonical_form(const Graph& g);

constexpr int kMaxCanonicalOrder = 16;

}  // namespace locdom
