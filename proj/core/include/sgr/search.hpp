#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgr/budget.hpp"
#include "sgr/canonical.hpp"
#include "sgr/signed_graph.hpp"

namespace sgr {

// Verdict for one order n: either no graph with negative girth >= girth_min
// and chi_b >= chi_min exists on n vertices (exhaustively proven), or a
// witness class is exhibited.
struct MinOrderVerdict {
    int n = 0;
    bool exhaustive = false;
    std::size_t classes_visited = 0;
    std::size_t witness_classes = 0;
    std::optional<SignedGraph> witness;
    std::optional<CanonicalForm> witness_form;
};

struct SearchReport {
    int girth_min = 0;
    int chi_min = 0;
    int n_max = 0;
    std::vector<MinOrderVerdict> per_n;
    std::optional<int> minimum_order;
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;

    std::string to_csv() const;  // header n,girth,chi_b,bound_low,bound_high,status
};

// Exhaustive search for the least order admitting negative girth >= girth_min
// and balanced chromatic number >= chi_min. Graphs are grown one vertex at a
// time over the pair alphabet {none,+,-,digon} (digons pruned for
// girth_min >= 3), any negative cycle shorter than girth_min kills a branch,
// and levels are deduplicated by canonical form. When checkpoint_path is
// nonempty each completed level's frontier is written there, one canonical
// form per line.
SearchReport minimum_order_search(int girth_min, int chi_min, int n_max,
                                  const SearchBudget& budget = {}, int threads = 1,
                                  const std::string& checkpoint_path = {});

enum class HarnessFamily { extremal_construction, negative_cliques, mycielskian_iterates };

struct HarnessRow {
    int n = 0;
    std::optional<int> girth;   // empty when infinite
    std::optional<int> chi_b;   // empty when not computed exactly
    std::uint64_t bound_low = 0;
    std::uint64_t bound_high = 0;
    std::string status;
};

// Measured girth of a graph family against the ceil(n^(1/(p-1))/e) lower and
// 2(p-1)*ceil(n^(1/(p-1))) upper bound scales.
std::vector<HarnessRow> girth_bounds_sweep(HarnessFamily family, int p,
                                           const std::vector<int>& orders,
                                           const SearchBudget& budget = {}, int threads = 1);

std::string harness_csv(const std::vector<HarnessRow>& rows);

}  // namespace sgr
