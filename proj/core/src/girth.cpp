#include "sgr/girth.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_map>

#include "sgr/double_cover.hpp"
#include "sgr/parallel.hpp"

namespace sgr {

int NegativeGirth::length() const {
    if (!cycle) throw std::logic_error("negative girth is infinite (balanced graph)");
    return cycle->length();
}

NegativeCycle reduce_closed_walk(std::vector<int> vertices, std::vector<Sign> signs) {
    if (vertices.size() != signs.size() || vertices.empty())
        throw std::invalid_argument("reduce_closed_walk: malformed walk");
    {
        Sign product = Sign::plus;
        for (Sign s : signs) product = product * s;
        if (product != Sign::minus)
            throw std::invalid_argument("reduce_closed_walk: walk is not negative");
    }
    for (;;) {
        std::unordered_map<int, int> first_seen;
        int rep_i = -1, rep_j = -1;
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            auto [it, inserted] = first_seen.emplace(vertices[j], static_cast<int>(j));
            if (!inserted) {
                rep_i = it->second;
                rep_j = static_cast<int>(j);
                break;
            }
        }
        if (rep_i < 0) break;  // simple
        Sign seg = Sign::plus;
        for (int t = rep_i; t < rep_j; ++t) seg = seg * signs[t];
        if (seg == Sign::minus) {
            // the excised segment is itself a shorter negative closed walk
            vertices = std::vector<int>(vertices.begin() + rep_i, vertices.begin() + rep_j);
            signs = std::vector<Sign>(signs.begin() + rep_i, signs.begin() + rep_j);
        } else {
            vertices.erase(vertices.begin() + rep_i, vertices.begin() + rep_j);
            signs.erase(signs.begin() + rep_i, signs.begin() + rep_j);
        }
    }
    if (vertices.size() < 2)
        throw std::logic_error("reduce_closed_walk: reduction collapsed below a 2-cycle");
    return NegativeCycle{std::move(vertices), std::move(signs)};
}

namespace {

// BFS in the cover limited to finding dist(pos(v) -> neg(v)).
int cover_self_distance(const DoubleCover& cover, int v, std::vector<int>& dist,
                        std::vector<int>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    const int src = cover.pos(v), dst = cover.neg(v);
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (u == dst) return dist[u];
        for (int w : cover.graph.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return -1;
}

}  // namespace

NegativeGirth negative_girth(const SignedGraph& g, int threads) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    const DoubleCover cover = double_cover(g);

    struct Best {
        int dist = INT_MAX;
        int src = INT_MAX;
    };
    std::vector<Best> partial(std::max<std::size_t>(1, std::min<std::size_t>(n, threads < 1 ? 1 : threads)));
    parallel_chunks(static_cast<std::size_t>(n), threads,
                    [&](std::size_t begin, std::size_t end, int chunk) {
                        std::vector<int> dist(2 * n), queue;
                        queue.reserve(2 * n);
                        Best best;
                        for (std::size_t v = begin; v < end; ++v) {
                            int d = cover_self_distance(cover, static_cast<int>(v), dist, queue);
                            if (d >= 0 && (d < best.dist || (d == best.dist && static_cast<int>(v) < best.src))) {
                                best.dist = d;
                                best.src = static_cast<int>(v);
                            }
                        }
                        partial[chunk] = best;
                    });
    Best best;
    for (const auto& b : partial)
        if (b.dist < best.dist || (b.dist == best.dist && b.src < best.src)) best = b;

    if (best.dist == INT_MAX) return {};

    // Lexicographically smallest shortest pos(v*) -> neg(v*) path: walk down
    // the distance-to-target field, always taking the smallest (base, fiber)
    // neighbor one step closer.
    const int v0 = best.src;
    std::vector<int> dist_t(2 * n, -1), queue;
    dist_t[cover.neg(v0)] = 0;
    queue.push_back(cover.neg(v0));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int w : cover.graph.neighbors(u))
            if (dist_t[w] < 0) {
                dist_t[w] = dist_t[u] + 1;
                queue.push_back(w);
            }
    }

    std::vector<int> walk_vertices;
    std::vector<Sign> walk_signs;
    int cur = cover.pos(v0);
    while (cur != cover.neg(v0)) {
        int next = -1;
        for (int w : cover.graph.neighbors(cur)) {
            if (dist_t[w] != dist_t[cur] - 1) continue;
            if (next < 0 ||
                std::pair(cover.base(w), cover.in_neg_fiber(w)) <
                    std::pair(cover.base(next), cover.in_neg_fiber(next))) {
                next = w;
            }
        }
        walk_vertices.push_back(cover.base(cur));
        walk_signs.push_back(cover.in_neg_fiber(cur) == cover.in_neg_fiber(next) ? Sign::plus
                                                                                 : Sign::minus);
        cur = next;
    }

    NegativeGirth out;
    out.cycle = canonicalized(reduce_closed_walk(std::move(walk_vertices), std::move(walk_signs)));
    return out;
}

}  // namespace sgr
