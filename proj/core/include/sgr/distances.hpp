#pragma once

#include <optional>
#include <vector>

#include "sgr/signed_graph.hpp"

namespace sgr {

// Hop distances from src; -1 marks unreachable vertices. Distances are
// sign-blind (underlying graph).
std::vector<int> bfs_distances(const PlainGraph& g, int src);
std::vector<int> bfs_distances(const SignedGraph& g, int src);

std::optional<int> distance(const SignedGraph& g, int x, int y);

// Vertices within hop distance r of v, sorted.
std::vector<int> ball(const SignedGraph& g, int v, int r);

// min over x in h of max over y in h of d_G(x,y), with ambient-graph
// distances. nullopt when some pair is unreachable (infinite radius).
// Throws on empty h.
std::optional<int> radius_in(const SignedGraph& g, const std::vector<int>& h);

}  // namespace sgr
