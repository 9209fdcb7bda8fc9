#pragma once

#include <optional>

#include "sgr/signed_graph.hpp"

namespace sgr {

// Brute-force cross-checks, deliberately independent of the production
// algorithms: balance by enumerating all 2^n switchings, negative girth by
// enumerating simple cycles. Desk scale only.

// True iff some switching makes every edge positive. Guarded to |V| <= 20.
bool oracle_balanced(const SignedGraph& g);

// Length of a shortest negative cycle by enumerating simple cycles in
// increasing length; nullopt when none exists. Guarded to |V| <= 16.
std::optional<int> oracle_negative_girth(const SignedGraph& g);

}  // namespace sgr
