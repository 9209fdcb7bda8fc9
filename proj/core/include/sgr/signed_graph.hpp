#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgr/sign.hpp"

namespace sgr {

// A signed edge with normalized endpoints (u < v after construction).
struct SignedEdge {
    int u = 0;
    int v = 0;
    Sign sign = Sign::plus;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    // Order used by the file writer: (u, v, + before -).
    friend bool operator<(const SignedEdge& a, const SignedEdge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.sign == Sign::plus && b.sign == Sign::minus;
    }
};

// State of an unordered vertex pair. A pair carries at most one edge per
// sign; both at once form a digon (a negative 2-cycle).
enum class PairState : std::uint8_t { none = 0, plus = 1, minus = 2, digon = 3 };

struct Arc {
    int to;
    Sign sign;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// Unsigned simple graph; used for double covers, negative-edge subgraphs
// and ordinary chromatic numbers.
class PlainGraph {
public:
    PlainGraph() = default;
    PlainGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Immutable signed graph on vertices 0..n-1. Parallel edges of equal sign
// are rejected; a +/- pair on the same endpoints (digon) is allowed, loops
// are not. Values are safe to share across threads.
class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(int n, std::vector<SignedEdge> edges);
    SignedGraph(int n, std::vector<SignedEdge> edges, std::vector<std::string> labels);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    // Signed arcs out of v (each digon contributes two arcs).
    std::span<const Arc> arcs(int v) const { return {adj_[v].data(), adj_[v].size()}; }
    // Underlying neighbors of v, sorted, digons deduplicated.
    const std::vector<int>& neighbors(int v) const { return plain_adj_[v]; }

    PairState pair_state(int u, int v) const;
    bool has_edge(int u, int v, Sign s) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<Arc>> adj_;
    std::vector<std::vector<int>> plain_adj_;
    std::vector<std::string> labels_;
    std::unordered_map<std::uint64_t, PairState> pair_states_;

    void check_vertex(int v) const;
};

// Flips the sign of every edge with exactly one endpoint in `flip_set`.
SignedGraph switched(const SignedGraph& g, const std::vector<int>& flip_set);

// Induced subgraph on the (deduplicated, sorted) vertex set `s`; vertices are
// relabeled 0..|s|-1 in increasing original order. `original_ids`, when given,
// receives the reverse mapping.
SignedGraph induced(const SignedGraph& g, std::vector<int> s,
                    std::vector<int>* original_ids = nullptr);

PlainGraph underlying(const SignedGraph& g);
// Vertex set of g, edges = pairs joined by at least one negative edge.
PlainGraph negative_subgraph(const SignedGraph& g);
SignedGraph to_all_negative(const PlainGraph& g);

PlainGraph complete_graph(int n);
PlainGraph cycle_graph(int n);
PlainGraph path_graph(int n);

SignedGraph make_all_negative_clique(int n);
// A k-cycle that is a negative cycle: edges (i,i+1) positive, closing edge negative.
SignedGraph make_negative_cycle(int k);
SignedGraph make_digon();

}  // namespace sgr
