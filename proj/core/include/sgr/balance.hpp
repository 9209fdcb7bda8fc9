#pragma once

#include <optional>
#include <vector>

#include "sgr/signed_graph.hpp"

namespace sgr {

// A negative cycle v_0 .. v_{l-1} with signs[i] the sign of the edge used
// between vertices[i] and vertices[(i+1) % l]. Keeping the sign per step
// disambiguates digons. Length 2 is a digon; loops do not exist.
struct NegativeCycle {
    std::vector<int> vertices;
    std::vector<Sign> signs;

    int length() const { return static_cast<int>(vertices.size()); }
};

// Rotates/reflects a cycle into its canonical writing: starts at the smallest
// vertex, smaller of the two directions by (vertex sequence, sign sequence).
NegativeCycle canonicalized(NegativeCycle c);

// Throws std::runtime_error if the cycle is not a valid negative cycle of g
// (repeated vertex, missing edge, or positive sign product).
void validate_negative_cycle(const SignedGraph& g, const NegativeCycle& c);

struct WalkStep {
    int from;
    int to;
    Sign sign;
};

// Sign product of a closed walk; the empty walk is positive. Throws on a
// non-closed walk or a step whose edge is absent.
Sign closed_walk_sign(const SignedGraph& g, const std::vector<WalkStep>& walk);

// Outcome of a balance test: exactly one of the two witnesses is set.
// `switching` lists the vertices to switch so that every edge becomes
// positive; `cycle` is a negative cycle.
struct BalanceResult {
    std::optional<std::vector<int>> switching;
    std::optional<NegativeCycle> cycle;

    bool balanced() const { return switching.has_value(); }
};

// Spanning-forest labeling; linear in |V| + |E|. A digon is reported
// immediately as a length-2 witness.
BalanceResult is_balanced(const SignedGraph& g);

bool is_all_positive(const SignedGraph& g);

}  // namespace sgr
