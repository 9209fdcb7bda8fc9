#pragma once

#include <optional>

#include "sgr/balance.hpp"
#include "sgr/signed_graph.hpp"

namespace sgr {

// Negative girth: the witness cycle when finite, empty when the graph is
// balanced. Infinity is a distinct state, never a sentinel length.
struct NegativeGirth {
    std::optional<NegativeCycle> cycle;

    bool finite() const { return cycle.has_value(); }
    int length() const;
};

// Shortest negative cycle via (v,+) -> (v,-) searches in the double cover.
// Deterministic for any thread count: ties resolved by smallest source
// vertex, then the lexicographically smallest witness walk.
NegativeGirth negative_girth(const SignedGraph& g, int threads = 1);

// Reduces a closed walk with negative sign product to a simple negative
// cycle of no greater length: the segment between the first repeated vertex
// pair is excised when positive, recursed into when negative.
NegativeCycle reduce_closed_walk(std::vector<int> vertices, std::vector<Sign> signs);

}  // namespace sgr
