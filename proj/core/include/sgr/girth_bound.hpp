#pragma once

#include <string>
#include <vector>

#include "sgr/balance.hpp"
#include "sgr/budget.hpp"
#include "sgr/signed_graph.hpp"

namespace sgr {

// Layered counting certificate that a signed graph needing three balanced
// colors must contain a short negative cycle: take a maximum balanced set B,
// a shortest negative cycle C avoiding it, and count B-vertices per distance
// layer around a vertex of C. Every inequality is instantiated and checked.
struct GirthBoundLayer {
    int i = 0;
    std::size_t u_size = 0;         // |U_i|
    std::size_t u_minus_b = 0;      // |U_i \ B|  (>= 2i-1)
    std::size_t v_cap_b = 0;        // |V_i cap B|  (>= 2i-1)
    bool u_balanced = false;        // U_i is a balanced set
    bool u_lower_ok = false;
    bool v_lower_ok = false;
};

struct GirthBoundCertificate {
    int n = 0;
    std::vector<int> max_balanced;  // B, lexicographically smallest maximum
    NegativeCycle cycle;            // C, shortest negative cycle of G - B
    int chosen_vertex = -1;         // smallest vertex of C
    int ell = 0;                    // |C|
    int global_girth = 0;           // negative girth of G itself
    int chi_b = 0;

    std::vector<std::vector<int>> dist_layers;  // V_i around chosen_vertex
    std::vector<char> layer_balanced;           // V_i balanced, 0 <= i <= floor((ell-2)/2)
    std::vector<GirthBoundLayer> layers;        // i = 1 .. floor((ell-2)/2)

    long long b_lower = 0;  // floor((ell-2)/2)^2
    bool cycle_induced_ok = false;
    bool cycle_avoids_b_ok = false;
    bool b_lower_ok = false;        // |B| >= b_lower
    bool order_lower_ok = false;    // n >= ell + b_lower
    bool girth_consistent_ok = false;  // ell >= global girth
    bool layers_balanced_ok = false;

    bool all_ok() const;
    std::string to_text() const;  // deterministic rendering
};

// Reading of the "needs three balanced colors" precondition.
enum class ChiThreeReading { at_least_three, exactly_three };

// Builds and checks the full certificate. Throws std::invalid_argument when
// the precondition fails (chi_b <= 2, or != 3 under exactly_three).
GirthBoundCertificate layer_certificate(const SignedGraph& g,
                                        ChiThreeReading reading = ChiThreeReading::at_least_three,
                                        const SearchBudget& budget = {});

// negative_girth(g) < 2*sqrt(n-1) + 1, decided exactly via the integer form
// (l-1)^2 < 4(n-1). Same precondition as layer_certificate.
bool negative_girth_bound_holds(const SignedGraph& g,
                                ChiThreeReading reading = ChiThreeReading::at_least_three,
                                const SearchBudget& budget = {});

}  // namespace sgr
