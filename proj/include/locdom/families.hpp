#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class FamilyKind {
    LtdComb,
    Deg1Twins,
    Deg2Twins,
    ClosedReg,
    TightSubcubic,
    TightCubic10,
    FGraph,
    F3Prime,
    Prism,
    P2BoxC4,
    Path,
    CompleteK,
    StarK1,
    CompleteBipartite33,
};

// `a` carries the main parameter (p, k, i or n) and `b` the second one
// (ClosedReg takes r in `a` and k in `b`). StarK1 takes the order n.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int a = 0;
    int b = 0;

    static FamilySpec ltd_comb(int p) { return {FamilyKind::LtdComb, p, 0}; }
    static FamilySpec deg1_twins(int k) { return {FamilyKind::Deg1Twins, k, 0}; }
    static FamilySpec deg2_twins(int k) { return {FamilyKind::Deg2Twins, k, 0}; }
    static FamilySpec closed_reg(int r, int k) { return {FamilyKind::ClosedReg, r, k}; }
    static FamilySpec tight_subcubic(int k) { return {FamilyKind::TightSubcubic, k, 0}; }
    static FamilySpec tight_cubic10() { return {FamilyKind::TightCubic10, 0, 0}; }
    static FamilySpec f_graph(int i) { return {FamilyKind::FGraph, i, 0}; }
    static FamilySpec f3_prime() { return {FamilyKind::F3Prime, 0, 0}; }
    static FamilySpec prism() { return {FamilyKind::Prism, 0, 0}; }
    static FamilySpec p2_box_c4() { return {FamilyKind::P2BoxC4, 0, 0}; }
    static FamilySpec path(int n) { return {FamilyKind::Path, n, 0}; }
    static FamilySpec complete(int n) { return {FamilyKind::CompleteK, n, 0}; }
    static FamilySpec star(int n) { return {FamilyKind::StarK1, n, 0}; }
    static FamilySpec k33() { return {FamilyKind::CompleteBipartite33, 0, 0}; }

    std::string to_string() const;
};

// Accepts forms such as "deg1-twins:1", "closed-reg:4,1", "f-graph:3", "k33".
FamilySpec parse_family_spec(std::string_view text);
std::vector<std::string> family_names();

enum class ClaimKind { ExactGamma, UpperBoundWitness, ExactLtd };
std::string_view claim_kind_name(ClaimKind k);

struct FamilyInstance {
    FamilySpec spec;
    Graph graph;
    VertexSet witness;
    int claimed = 0;
    ClaimKind claim_kind = ClaimKind::UpperBoundWitness;
    std::vector<std::string> labels;  // labels[v] names vertex v

    int vertex(const std::string& label) const;
};

// Throws BadParameter for out-of-range parameters.
FamilyInstance generate(const FamilySpec& spec);

// The 11-vertex gadget hung off each spine vertex of Deg2Twins, with its
// attachment vertex u as vertex 0.
FamilyInstance deg2_twins_gadget();

}  // namespace locdom
