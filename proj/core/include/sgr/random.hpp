#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sgr/signed_graph.hpp"

namespace sgr {

// mt19937_64 with hand-rolled draws; std distributions are not pinned down
// by the standard, and seeded runs must reproduce across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    int below(int m) {  // uniform in [0, m)
        return static_cast<int>(next() % static_cast<std::uint64_t>(m));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

inline SignedGraph random_signed_graph(Rng& rng, int n, double edge_prob,
                                       double digon_share = 0.1) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!rng.chance(edge_prob)) continue;
            if (rng.chance(digon_share)) {
                edges.push_back({u, v, Sign::plus});
                edges.push_back({u, v, Sign::minus});
            } else {
                edges.push_back({u, v, rng.chance(0.5) ? Sign::plus : Sign::minus});
            }
        }
    }
    return SignedGraph(n, std::move(edges));
}

inline std::vector<int> random_subset(Rng& rng, int n) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (rng.chance(0.5)) s.push_back(v);
    return s;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

// Relabels vertices: vertex v of g becomes perm[v].
inline SignedGraph permuted(const SignedGraph& g, const std::vector<int>& perm) {
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) {
        e.u = perm[e.u];
        e.v = perm[e.v];
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.label(v);
    }
    return SignedGraph(g.vertex_count(), std::move(edges), std::move(labels));
}

}  // namespace sgr
