#include "sgr/signed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgr {

namespace {

std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

PlainGraph::PlainGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("PlainGraph: negative vertex count");
    adj_.resize(n_);
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("PlainGraph: loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("PlainGraph: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool PlainGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges)
    : SignedGraph(n, std::move(edges), {}) {}

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges, std::vector<std::string> labels)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("SignedGraph: label count does not match vertex count");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("SignedGraph: loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("SignedGraph: endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("SignedGraph: duplicate signed edge " +
                                        std::to_string(edges[i].u) + "-" +
                                        std::to_string(edges[i].v));
    }
    edges_ = std::move(edges);
    labels_ = std::move(labels);

    adj_.resize(n_);
    plain_adj_.resize(n_);
    for (const auto& e : edges_) {
        adj_[e.u].push_back({e.v, e.sign});
        adj_[e.v].push_back({e.u, e.sign});
        auto key = pair_key(e.u, e.v);
        auto& st = pair_states_[key];
        if (st == PairState::none)
            st = e.sign == Sign::plus ? PairState::plus : PairState::minus;
        else
            st = PairState::digon;
    }
    for (int v = 0; v < n_; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end(), [](const Arc& x, const Arc& y) {
            if (x.to != y.to) return x.to < y.to;
            return x.sign == Sign::plus && y.sign == Sign::minus;
        });
        auto& p = plain_adj_[v];
        for (const auto& arc : a)
            if (p.empty() || p.back() != arc.to) p.push_back(arc.to);
    }
}

void SignedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("SignedGraph: vertex " + std::to_string(v) + " out of range");
}

PairState SignedGraph::pair_state(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = pair_states_.find(pair_key(u, v));
    return it == pair_states_.end() ? PairState::none : it->second;
}

bool SignedGraph::has_edge(int u, int v, Sign s) const {
    auto st = pair_state(u, v);
    if (st == PairState::digon) return true;
    return st == (s == Sign::plus ? PairState::plus : PairState::minus);
}

const std::string& SignedGraph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

void SignedGraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("SignedGraph: label count does not match vertex count");
    labels_ = std::move(labels);
}

SignedGraph switched(const SignedGraph& g, const std::vector<int>& flip_set) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : flip_set) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("switched: vertex out of range");
        in_set[v] = 1;
    }
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges)
        if (in_set[e.u] != in_set[e.v]) e.sign = flipped(e.sign);
    return SignedGraph(g.vertex_count(), std::move(edges), g.labels());
}

SignedGraph induced(const SignedGraph& g, std::vector<int> s, std::vector<int>* original_ids) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            throw std::invalid_argument("induced: vertex out of range");
        index[s[i]] = static_cast<int>(i);
    }
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.push_back({index[e.u], index[e.v], e.sign});
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(s.size());
        for (int v : s) labels.push_back(g.label(v));
    }
    if (original_ids) *original_ids = s;
    return SignedGraph(static_cast<int>(s.size()), std::move(edges), std::move(labels));
}

PlainGraph underlying(const SignedGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        if (edges.empty() || edges.back() != std::make_pair(e.u, e.v))
            edges.emplace_back(e.u, e.v);
    return PlainGraph(g.vertex_count(), std::move(edges));
}

PlainGraph negative_subgraph(const SignedGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        if (e.sign == Sign::minus) edges.emplace_back(e.u, e.v);
    return PlainGraph(g.vertex_count(), std::move(edges));
}

SignedGraph to_all_negative(const PlainGraph& g) {
    std::vector<SignedEdge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.push_back({u, v, Sign::minus});
    return SignedGraph(g.vertex_count(), std::move(edges));
}

PlainGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return PlainGraph(n, std::move(edges));
}

PlainGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return PlainGraph(n, std::move(edges));
}

PlainGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return PlainGraph(n, std::move(edges));
}

SignedGraph make_all_negative_clique(int n) { return to_all_negative(complete_graph(n)); }

SignedGraph make_negative_cycle(int k) {
    if (k < 2) throw std::invalid_argument("make_negative_cycle: need length >= 2");
    if (k == 2) return make_digon();
    std::vector<SignedEdge> edges;
    for (int v = 0; v + 1 < k; ++v) edges.push_back({v, v + 1, Sign::plus});
    edges.push_back({0, k - 1, Sign::minus});
    return SignedGraph(k, std::move(edges));
}

SignedGraph make_digon() {
    return SignedGraph(2, {{0, 1, Sign::plus}, {0, 1, Sign::minus}});
}

}  // namespace sgr
