#pragma once

#include "sgr/signed_graph.hpp"

namespace sgr {

// The 2-lift of a signed graph: fibers (v,+) and (v,-). A positive edge uv
// joins equal fibers, a negative edge joins opposite fibers, so negative
// closed walks in the base are exactly the fiber-crossing closed paths.
struct DoubleCover {
    PlainGraph graph;  // on 2n vertices
    int base_n = 0;

    int pos(int v) const { return v; }
    int neg(int v) const { return v + base_n; }
    int base(int x) const { return x < base_n ? x : x - base_n; }
    bool in_neg_fiber(int x) const { return x >= base_n; }
    int mate(int x) const { return x < base_n ? x + base_n : x - base_n; }
};

DoubleCover double_cover(const SignedGraph& g);

}  // namespace sgr
