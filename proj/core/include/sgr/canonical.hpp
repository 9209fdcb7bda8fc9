#pragma once

#include <compare>
#include <string>

#include "sgr/signed_graph.hpp"

namespace sgr {

// Canonical byte form of a signed graph, equal for two graphs exactly when
// one maps to the other by a vertex permutation composed with a switching.
// The text is "<n>:<pair states>" over pairs (0,1),(0,2),...,(n-2,n-1) with
// digits 0 none, 1 +, 2 -, 3 digon, so a form reconstructs its graph.
struct CanonicalForm {
    std::string text;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Canonically labels the double cover with its fiber pairing marked (a
// switching is a fiber swap, a relabeling is a fiber-respecting cover map),
// then reads a signed representative back off the canonical cover. Desk
// scale; guarded by max_n.
CanonicalForm canonical_form(const SignedGraph& g, int max_n = 20);

SignedGraph canonical_representative(const SignedGraph& g, int max_n = 20);

SignedGraph graph_from_form(const CanonicalForm& form);

}  // namespace sgr
