#include "sgr/distances.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgr {

namespace {

template <typename Adjacency>
std::vector<int> bfs_impl(int n, int src, const Adjacency& neighbors_of) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : neighbors_of(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

void check_vertex(int n, int v, const char* what) {
    if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

}  // namespace

std::vector<int> bfs_distances(const PlainGraph& g, int src) {
    check_vertex(g.vertex_count(), src, "bfs_distances");
    return bfs_impl(g.vertex_count(), src, [&](int u) -> const std::vector<int>& {
        return g.neighbors(u);
    });
}

std::vector<int> bfs_distances(const SignedGraph& g, int src) {
    check_vertex(g.vertex_count(), src, "bfs_distances");
    return bfs_impl(g.vertex_count(), src, [&](int u) -> const std::vector<int>& {
        return g.neighbors(u);
    });
}

std::optional<int> distance(const SignedGraph& g, int x, int y) {
    check_vertex(g.vertex_count(), x, "distance");
    check_vertex(g.vertex_count(), y, "distance");
    int d = bfs_distances(g, x)[y];
    if (d < 0) return std::nullopt;
    return d;
}

std::vector<int> ball(const SignedGraph& g, int v, int r) {
    check_vertex(g.vertex_count(), v, "ball");
    if (r < 0) throw std::invalid_argument("ball: negative radius");
    auto dist = bfs_distances(g, v);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (dist[u] >= 0 && dist[u] <= r) out.push_back(u);
    return out;
}

std::optional<int> radius_in(const SignedGraph& g, const std::vector<int>& h) {
    if (h.empty()) throw std::invalid_argument("radius_in: empty vertex set");
    std::optional<int> best;
    for (int x : h) {
        check_vertex(g.vertex_count(), x, "radius_in");
        auto dist = bfs_distances(g, x);
        int ecc = 0;
        bool reachable = true;
        for (int y : h) {
            check_vertex(g.vertex_count(), y, "radius_in");
            if (dist[y] < 0) {
                reachable = false;
                break;
            }
            ecc = std::max(ecc, dist[y]);
        }
        if (!reachable) continue;
        if (!best || ecc < *best) best = ecc;
    }
    return best;
}

}  // namespace sgr
