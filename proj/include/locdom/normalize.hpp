#pragma once

#include "locdom/graph.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom {

// Moves every support vertex into an LD-set without changing its size: while
// some support s is missing, its leaves are all in the set and the least of
// them is swapped for s. Requires g connected with n >= 3 and s an LD-set;
// throws HypothesisViolated otherwise.
VertexSet normalize_supports_in(const Graph& g, const VertexSet& s);

// Supports in, then every leaf out: a leaf u in the set is dropped when the
// rest is still locating-dominating, and otherwise swapped for the unique
// vertex v outside the set with I(v) = {support of u}. The result never grows.
// Additionally requires that no support has two leaves.
VertexSet normalize_leaves_out(const Graph& g, const VertexSet& s);

}  // namespace locdom
