#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgr/balance.hpp"
#include "sgr/budget.hpp"
#include "sgr/signed_graph.hpp"

namespace sgr {

// Balance verdict for an induced vertex set, witnesses in original ids.
struct SetBalance {
    bool balanced = false;
    std::vector<int> switching;
    std::optional<NegativeCycle> cycle;
};

SetBalance is_balanced_set(const SignedGraph& g, const std::vector<int>& s);

// True iff `colors` is total on V(g), uses colors in 1..p, and every class
// induces a balanced set. Throws on a partial coloring.
bool check_coloring(const SignedGraph& g, const std::vector<int>& colors, int p);

struct BalancedColoring {
    std::vector<int> colors;  // 1-based
    int palette = 0;
    std::vector<std::vector<int>> class_switchings;  // witness per color class
};

// check_coloring plus per-class switching witnesses; throws when invalid.
BalancedColoring make_balanced_coloring(const SignedGraph& g, std::vector<int> colors, int p);

struct ChiBResult {
    int value = 0;        // exact chi_b when complete, else best upper bound found
    int lower_bound = 0;  // palettes below this are refuted
    bool complete = true;
    std::uint64_t nodes = 0;
    std::vector<int> coloring;
};

// Exact balanced chromatic number by branch and bound: vertices assigned in
// degeneracy order, classes kept balance-consistent incrementally (union-find
// with parity), color j+1 never opened before color j. chi_b of the empty
// graph is 0; isolated vertices never raise it.
ChiBResult balanced_chromatic_number(const SignedGraph& g, const SearchBudget& budget = {});

struct PColoringSearch {
    std::optional<bool> found;  // nullopt when the budget ran out
    std::vector<int> coloring;
    std::uint64_t nodes = 0;
};

PColoringSearch find_balanced_p_coloring(const SignedGraph& g, int p,
                                         const SearchBudget& budget = {});

// Independent oracle: exact chi_b by enumerating set partitions into classes
// checked balanced via all 2^|S| switchings. No BFS, no branch and bound.
// Guarded to |V| <= 9.
int chi_b_by_partitions(const SignedGraph& g);

struct SubsetSearch {
    std::vector<int> vertices;
    std::vector<int> coloring;  // colors on chosen vertices (original ids), 0 elsewhere
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Maximum-cardinality balanced set; among maxima the lexicographically
// smallest. Exponential worst case, budgeted.
SubsetSearch max_balanced_set(const SignedGraph& g, const SearchBudget& budget = {});

// Maximum-cardinality S with chi_b(G[S]) <= p, plus a p-coloring of S.
// p = 1 delegates to max_balanced_set.
SubsetSearch max_balanced_p_colorable_subgraph(const SignedGraph& g, int p,
                                               const SearchBudget& budget = {});

struct ChromaticResult {
    int value = 0;
    bool complete = true;
    std::uint64_t nodes = 0;
    std::vector<int> coloring;
};

// Ordinary chromatic number of an unsigned graph (branch and bound).
ChromaticResult chromatic_number(const PlainGraph& g, const SearchBudget& budget = {});

// Assignment order used by the solvers: reverse of repeated min-degree
// removal, ties to the smallest index.
std::vector<int> degeneracy_order(const PlainGraph& g);

}  // namespace sgr
