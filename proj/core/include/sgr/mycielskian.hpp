#pragma once

#include <optional>
#include <vector>

#include "sgr/signed_graph.hpp"

namespace sgr {

// Sign conventions for the leveled cone construction. Cross-level edges
// either inherit the base edge's sign or are all positive; apex edges carry
// one fixed sign.
struct MycielskiConvention {
    bool cross_inherit = true;
    Sign apex_sign = Sign::plus;

    friend bool operator==(const MycielskiConvention&, const MycielskiConvention&) = default;
};

// Generalized Mycielskian with `levels` copies of V(G) plus an apex:
// level 0 keeps G's edges; (v,i)-(w,i+1) and (w,i)-(v,i+1) for every edge vw;
// apex joins every level levels-1 vertex. Vertex (v,i) gets index i*n+v,
// the apex is levels*n.
SignedGraph generalized_mycielskian(const SignedGraph& base, int levels,
                                    MycielskiConvention convention = {});

// The 13-vertex witness: balanced chromatic number 3, negative girth 4. The
// leveled-cone conventions over a negative 4-cycle are tried first and their
// measurements recorded; none meets the gate, so the graph falls back to the
// article's explicit 13-vertex drawing (which does). `from_figure` says which
// source produced the returned graph.
struct Myc13Outcome {
    struct Attempt {
        MycielskiConvention convention;
        int chi_b = 0;
        std::optional<int> girth;
    };

    SignedGraph graph;
    MycielskiConvention convention;
    bool gate_passed = false;
    bool from_figure = false;
    int chi_b = 0;
    std::optional<int> girth;
    std::vector<Attempt> tried;
};

Myc13Outcome myc13_detailed();

// Cached gate-checked instance.
const SignedGraph& myc13();

}  // namespace sgr
