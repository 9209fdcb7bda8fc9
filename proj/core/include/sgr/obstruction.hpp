#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgr/budget.hpp"
#include "sgr/intmath.hpp"
#include "sgr/signed_graph.hpp"

namespace sgr {

// A vertex set Q meant to be large (|Q| >= size_threshold) yet concentrated
// (radius in the ambient graph <= radius_threshold).
struct Obstruction {
    std::vector<int> vertices;
    std::uint64_t size_threshold = 0;
    long long radius_threshold = 0;
    std::optional<int> measured_radius;  // nullopt when infinite

    bool satisfied() const {
        return vertices.size() >= size_threshold && measured_radius.has_value() &&
               *measured_radius <= radius_threshold;
    }
};

// A BFS layer around the recursion's inner obstruction that came out smaller
// than the peeling argument needs. `core` is the inner obstruction plus all
// layers below the thin one; when the thin layer is genuine, core is a
// subgraph of small radius that is not balanced p-colorable.
struct LayerViolation {
    int level = 0;
    int layer = 0;
    std::size_t layer_size = 0;
    std::uint64_t required = 0;
    std::vector<int> core;
};

struct ObstructionOutcome {
    std::optional<std::vector<int>> coloring;  // colors on W (0 outside), <= level*p of them
    std::optional<Obstruction> obstruction;
    std::vector<LayerViolation> violations;
    bool complete = true;
    std::uint64_t nodes = 0;
    RootScale scale;
};

// Recursive obstruction construction: peel a maximum balanced p-colorable
// subgraph H off W, recurse on the rest, then grow the inner obstruction by
// r = ceil(n^(1/q)) BFS layers through H (ambient distances). Returns the
// level*p-coloring instead whenever the peeling bottoms out empty.
ObstructionOutcome find_obstruction(const SignedGraph& g, std::vector<int> w, int level, int p,
                                    int q, const SearchBudget& budget = {});

// A ball that is not balanced p-colorable: concrete evidence that some
// small-radius subgraph needs more than p colors.
struct FailureWitness {
    int center = -1;
    int ball_radius = 0;
    std::vector<int> vertices;
    int measured_radius = 0;
    int chi_b_value = 0;  // exact, > p
};

struct PeelOutcome {
    std::optional<std::vector<int>> coloring;  // at most p*q colors when set
    int rounds = 0;
    std::optional<FailureWitness> failure;
    std::optional<ObstructionOutcome> failure_obstruction;  // diagnostics
    bool complete = true;
    std::uint64_t nodes = 0;
};

// q rounds of maximum balanced-p-colorable peeling, p fresh colors per round.
// On failure, reports the smallest-radius ball whose induced subgraph needs
// more than p colors (radius at most q * ceil(n^(1/q))), plus the obstruction
// recursion's diagnostics.
PeelOutcome peel_color(const SignedGraph& g, int p, int q, const SearchBudget& budget = {},
                       int threads = 1);

struct ViolatingBall {
    int center = -1;
    int radius = 0;
    std::vector<int> vertices;
    int chi_b_value = 0;
};

struct BallCheckOutcome {
    bool holds = true;
    std::optional<ViolatingBall> violation;  // smallest center when violated
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Checks chi_b(ball(v, q*ceil(n^(1/q)))) <= p for every vertex. Equivalent to
// the subgraph-quantified hypothesis: any subgraph of radius <= q*r lies in
// the ball of its center, and chi_b is monotone under taking subgraphs.
BallCheckOutcome check_ball_colorability(const SignedGraph& g, int p, int q,
                                         const SearchBudget& budget = {}, int threads = 1);

}  // namespace sgr
