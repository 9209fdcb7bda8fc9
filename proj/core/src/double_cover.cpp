#include "sgr/double_cover.hpp"

namespace sgr {

DoubleCover double_cover(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edge_count());
    for (const auto& e : g.edges()) {
        if (e.sign == Sign::plus) {
            edges.emplace_back(e.u, e.v);
            edges.emplace_back(e.u + n, e.v + n);
        } else {
            edges.emplace_back(e.u, e.v + n);
            edges.emplace_back(e.v, e.u + n);
        }
    }
    return DoubleCover{PlainGraph(2 * n, std::move(edges)), n};
}

}  // namespace sgr
