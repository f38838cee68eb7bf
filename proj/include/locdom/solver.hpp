#pragma once

#include "locdom/graph.hpp"

namespace locdom {

struct SolverBudget {
    long long max_nodes = -1;    // negative: unlimited
    double max_seconds = -1.0;   // negative: unlimited
    bool lexmin_witness = true;  // spend extra searches to make the witness lex-min
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    long long nodes = 0;
    int lower_bound = 0;  // best bound known before the search
};

// Exact minimum locating-dominating set via branch and bound over the
// equivalent hitting-set instance. The witness is lexicographically least among
// optimal sets unless disabled in the budget. Throws BudgetExceeded.
SolveResult ld_number_exact(const Graph& g, const SolverBudget& budget = {});

// Same for locating-total-dominating sets. Throws IsolatedVertex.
SolveResult ltd_number_exact(const Graph& g, const SolverBudget& budget = {});

// Reference enumeration in order of size, then lexicographically. n <= 20.
SolveResult naive_ld_number(const Graph& g);
SolveResult naive_ltd_number(const Graph& g);

// ceil(n/3) for graphs of maximum degree at most 3. Throws NotSubcubic.
int subcubic_lower_bound(const Graph& g);

// ceil(2n/(maxdeg+3)), valid for every graph.
int degree_lower_bound(const Graph& g);

}  // namespace locdom
