#pragma once

#include <string>
#include <vector>

#include "sgr/signed_graph.hpp"

namespace sgr {

struct NamedGraph {
    std::string name;
    SignedGraph graph;
};

// Graphs that need at least three balanced colors: all-negative cliques, the
// gate-checked 13-vertex Mycielskian, reduced Schrijver graphs, digon cliques.
std::vector<NamedGraph> chi3_corpus();

// Wider mix for property sweeps: the chi3 corpus plus balanced and
// 2-chromatic instances.
std::vector<NamedGraph> mixed_corpus();

}  // namespace sgr
