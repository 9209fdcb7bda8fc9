#include "sgr/girth_bound.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgr/coloring.hpp"
#include "sgr/distances.hpp"
#include "sgr/girth.hpp"

namespace sgr {

bool GirthBoundCertificate::all_ok() const {
    if (!cycle_induced_ok || !cycle_avoids_b_ok || !b_lower_ok || !order_lower_ok ||
        !girth_consistent_ok || !layers_balanced_ok)
        return false;
    for (const auto& l : layers)
        if (!l.u_balanced || !l.u_lower_ok || !l.v_lower_ok) return false;
    return true;
}

std::string GirthBoundCertificate::to_text() const {
    std::ostringstream os;
    os << "n=" << n << " chi_b=" << chi_b << " ell=" << ell << " girth=" << global_girth << "\n";
    os << "B(" << max_balanced.size() << ") =";
    for (int v : max_balanced) os << " " << v;
    os << "\nC =";
    for (int i = 0; i < cycle.length(); ++i)
        os << " " << cycle.vertices[i] << sign_char(cycle.signs[i]);
    os << "\nv=" << chosen_vertex << "\n";
    for (const auto& l : layers) {
        os << "i=" << l.i << " |U_i|=" << l.u_size << " |U_i\\B|=" << l.u_minus_b
           << " (>=" << 2 * l.i - 1 << ": " << (l.u_lower_ok ? "ok" : "FAIL") << ")"
           << " |V_i&B|=" << l.v_cap_b << " (>=" << 2 * l.i - 1 << ": "
           << (l.v_lower_ok ? "ok" : "FAIL") << ")"
           << " U_i balanced: " << (l.u_balanced ? "ok" : "FAIL") << "\n";
    }
    os << "|B|=" << max_balanced.size() << " >= " << b_lower << ": "
       << (b_lower_ok ? "ok" : "FAIL") << "\n";
    os << "n=" << n << " >= " << ell << "+" << b_lower << ": " << (order_lower_ok ? "ok" : "FAIL")
       << "\n";
    return os.str();
}

GirthBoundCertificate layer_certificate(const SignedGraph& g, ChiThreeReading reading,
                                        const SearchBudget& budget) {
    GirthBoundCertificate cert;
    const int n = g.vertex_count();
    cert.n = n;

    ChiBResult chi = balanced_chromatic_number(g, budget);
    if (!chi.complete)
        throw std::runtime_error("layer_certificate: chi_b search exhausted its budget");
    cert.chi_b = chi.value;
    if (chi.value < 3)
        throw std::invalid_argument("layer_certificate: requires a graph needing >= 3 balanced colors");
    if (reading == ChiThreeReading::exactly_three && chi.value != 3)
        throw std::invalid_argument("layer_certificate: exactly_three reading, but chi_b != 3");

    SubsetSearch b = max_balanced_set(g, budget);
    if (!b.complete)
        throw std::runtime_error("layer_certificate: max balanced set search exhausted its budget");
    cert.max_balanced = b.vertices;
    std::vector<char> in_b(n, 0);
    for (int v : b.vertices) in_b[v] = 1;

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_b[v]) rest.push_back(v);
    std::vector<int> ids;
    SignedGraph sub = induced(g, rest, &ids);
    NegativeGirth sub_girth = negative_girth(sub);
    if (!sub_girth.finite())
        throw std::runtime_error("layer_certificate: G - B is balanced, contradicting chi_b >= 3");

    NegativeCycle c = *sub_girth.cycle;
    for (auto& v : c.vertices) v = ids[v];
    cert.cycle = canonicalized(std::move(c));
    validate_negative_cycle(g, cert.cycle);
    cert.ell = cert.cycle.length();
    cert.chosen_vertex = cert.cycle.vertices.front();
    cert.global_girth = negative_girth(g).length();
    cert.girth_consistent_ok = cert.ell >= cert.global_girth;

    cert.cycle_avoids_b_ok = true;
    for (int v : cert.cycle.vertices)
        if (in_b[v]) cert.cycle_avoids_b_ok = false;

    // induced: among C's vertices the only edges are the cycle's own, one
    // sign each (a digon on a cycle pair would be a shorter negative cycle).
    cert.cycle_induced_ok = true;
    {
        const auto& cv = cert.cycle.vertices;
        const int l = cert.ell;
        for (int a = 0; a < l && cert.cycle_induced_ok; ++a) {
            for (int bidx = a + 1; bidx < l && cert.cycle_induced_ok; ++bidx) {
                PairState st = g.pair_state(cv[a], cv[bidx]);
                bool consecutive = (bidx == a + 1) || (a == 0 && bidx == l - 1);
                if (!consecutive) {
                    if (st != PairState::none) cert.cycle_induced_ok = false;
                } else if (l == 2) {
                    if (st != PairState::digon) cert.cycle_induced_ok = false;
                } else {
                    int sign_idx = (bidx == a + 1) ? a : bidx;  // edge (cv[l-1], cv[0]) uses signs[l-1]
                    PairState want = cert.cycle.signs[sign_idx] == Sign::plus ? PairState::plus
                                                                              : PairState::minus;
                    if (st != want) cert.cycle_induced_ok = false;
                }
            }
        }
    }

    // distance layers around v, ambient distances
    auto dist = bfs_distances(g, cert.chosen_vertex);
    int max_d = 0;
    for (int v = 0; v < n; ++v) max_d = std::max(max_d, dist[v]);
    cert.dist_layers.assign(max_d + 1, {});
    for (int v = 0; v < n; ++v)
        if (dist[v] >= 0) cert.dist_layers[dist[v]].push_back(v);

    // The layer claims are licensed by the girth of the whole graph: a
    // negative cycle inside ball(v, i) has length at most 2i+1, so layers up
    // to floor((g-2)/2) are balanced. |C| >= g only strengthens the final
    // order inequality.
    const int imax = (cert.global_girth - 2) / 2;
    cert.layers_balanced_ok = true;
    for (int i = 0; i <= imax; ++i) {
        std::vector<int> vi = i < static_cast<int>(cert.dist_layers.size()) ? cert.dist_layers[i]
                                                                            : std::vector<int>{};
        bool ok = vi.empty() || is_balanced_set(g, vi).balanced;
        cert.layer_balanced.push_back(ok ? 1 : 0);
        if (!ok) cert.layers_balanced_ok = false;
    }

    for (int i = 1; i <= imax; ++i) {
        GirthBoundLayer layer;
        layer.i = i;
        std::vector<int> u;
        for (int j = 0; j < i && j < static_cast<int>(cert.dist_layers.size()); ++j)
            u.insert(u.end(), cert.dist_layers[j].begin(), cert.dist_layers[j].end());
        for (int j = i + 1; j < static_cast<int>(cert.dist_layers.size()); ++j)
            for (int v : cert.dist_layers[j])
                if (in_b[v]) u.push_back(v);
        std::sort(u.begin(), u.end());
        layer.u_size = u.size();
        layer.u_minus_b = 0;
        for (int v : u)
            if (!in_b[v]) ++layer.u_minus_b;
        layer.v_cap_b = 0;
        if (i < static_cast<int>(cert.dist_layers.size()))
            for (int v : cert.dist_layers[i])
                if (in_b[v]) ++layer.v_cap_b;
        layer.u_balanced = u.empty() || is_balanced_set(g, u).balanced;
        layer.u_lower_ok = layer.u_minus_b >= static_cast<std::size_t>(2 * i - 1);
        layer.v_lower_ok = layer.v_cap_b >= static_cast<std::size_t>(2 * i - 1);
        cert.layers.push_back(std::move(layer));
    }

    cert.b_lower = static_cast<long long>(imax) * imax;
    cert.b_lower_ok = static_cast<long long>(cert.max_balanced.size()) >= cert.b_lower;
    cert.order_lower_ok = n >= cert.ell + cert.b_lower;
    return cert;
}

bool negative_girth_bound_holds(const SignedGraph& g, ChiThreeReading reading,
                                const SearchBudget& budget) {
    ChiBResult chi = balanced_chromatic_number(g, budget);
    if (!chi.complete)
        throw std::runtime_error("negative_girth_bound_holds: chi_b search exhausted its budget");
    if (chi.value < 3)
        throw std::invalid_argument(
            "negative_girth_bound_holds: requires a graph needing >= 3 balanced colors");
    if (reading == ChiThreeReading::exactly_three && chi.value != 3)
        throw std::invalid_argument("negative_girth_bound_holds: exactly_three reading, chi_b != 3");
    NegativeGirth girth = negative_girth(g);
    if (!girth.finite())
        throw std::runtime_error("negative_girth_bound_holds: graph is balanced, yet chi_b >= 3");
    long long l = girth.length();
    long long n = g.vertex_count();
    return (l - 1) * (l - 1) < 4 * (n - 1);
}

}  // namespace sgr
