#pragma once

#include <string>

#include "locdom/graph.hpp"

namespace locdom {

// I-set of v with respect to S: the closed neighbourhood of v intersected with S.
VertexSet iset(const Graph& g, const VertexSet& s, int v);

struct LdVerdict {
    enum class Kind {
        Valid,
        Undominated,          // v outside S with empty I-set
        Unseparated,          // u < v outside S with equal I-sets
        NotTotallyDominated,  // v with no neighbour in S (total variant only)
    };
    Kind kind = Kind::Valid;
    int u = -1;
    int v = -1;

    bool valid() const noexcept { return kind == Kind::Valid; }
    std::string describe() const;

    static LdVerdict ok() { return {}; }
    static LdVerdict undominated(int v) { return {Kind::Undominated, -1, v}; }
    static LdVerdict unseparated(int u, int v) { return {Kind::Unseparated, u, v}; }
    static LdVerdict not_totally_dominated(int v) { return {Kind::NotTotallyDominated, -1, v}; }

    friend bool operator==(const LdVerdict&, const LdVerdict&) = default;
};

// Domination failures are reported before separation failures; within each
// class the smallest vertex (or lexicographically smallest pair) is reported.
LdVerdict verify_ld(const Graph& g, const VertexSet& s);
LdVerdict verify_ltd(const Graph& g, const VertexSet& s);

inline bool is_ld_set(const Graph& g, const VertexSet& s) { return verify_ld(g, s).valid(); }
inline bool is_ltd_set(const Graph& g, const VertexSet& s) { return verify_ltd(g, s).valid(); }

}  // namespace locdom
