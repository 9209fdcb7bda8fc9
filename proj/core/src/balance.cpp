#include "sgr/balance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgr {

NegativeCycle canonicalized(NegativeCycle c) {
    const int l = c.length();
    if (l == 0) return c;
    int start = static_cast<int>(
        std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());

    auto rotation = [&](bool forward) {
        NegativeCycle out;
        out.vertices.resize(l);
        out.signs.resize(l);
        for (int i = 0; i < l; ++i) {
            int idx = forward ? (start + i) % l : (start - i % l + l) % l;
            out.vertices[i] = c.vertices[idx];
            // sign between out.vertices[i] and out.vertices[i+1]
            out.signs[i] = forward ? c.signs[idx] : c.signs[(idx - 1 + l) % l];
        }
        return out;
    };

    NegativeCycle fwd = rotation(true);
    NegativeCycle bwd = rotation(false);
    auto sign_less = [](const std::vector<Sign>& a, const std::vector<Sign>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] == Sign::plus;
        }
        return false;
    };
    if (bwd.vertices < fwd.vertices ||
        (bwd.vertices == fwd.vertices && sign_less(bwd.signs, fwd.signs)))
        return bwd;
    return fwd;
}

void validate_negative_cycle(const SignedGraph& g, const NegativeCycle& c) {
    const int l = c.length();
    if (l < 2) throw std::runtime_error("negative cycle: length must be at least 2");
    if (static_cast<int>(c.signs.size()) != l)
        throw std::runtime_error("negative cycle: sign count does not match length");
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::runtime_error("negative cycle: repeated vertex");
    if (l == 2) {
        // digon: the two steps must use the two parallel edges
        if (c.signs[0] == c.signs[1])
            throw std::runtime_error("negative cycle: length-2 cycle must use both digon edges");
    }
    Sign product = Sign::plus;
    for (int i = 0; i < l; ++i) {
        int u = c.vertices[i];
        int v = c.vertices[(i + 1) % l];
        if (!g.has_edge(u, v, c.signs[i]))
            throw std::runtime_error("negative cycle: edge " + std::to_string(u) + "-" +
                                     std::to_string(v) + " with stated sign is absent");
        product = product * c.signs[i];
    }
    if (product != Sign::minus)
        throw std::runtime_error("negative cycle: sign product is positive");
}

Sign closed_walk_sign(const SignedGraph& g, const std::vector<WalkStep>& walk) {
    if (walk.empty()) return Sign::plus;
    Sign product = Sign::plus;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const auto& st = walk[i];
        if (!g.has_edge(st.from, st.to, st.sign))
            throw std::invalid_argument("closed_walk_sign: edge " + std::to_string(st.from) +
                                        "-" + std::to_string(st.to) + " with stated sign is absent");
        if (walk[(i + 1) % walk.size()].from != st.to)
            throw std::invalid_argument("closed_walk_sign: walk is not closed");
        product = product * st.sign;
    }
    return product;
}

BalanceResult is_balanced(const SignedGraph& g) {
    const int n = g.vertex_count();

    // A digon is unbalanced on its own.
    for (const auto& e : g.edges()) {
        if (g.pair_state(e.u, e.v) == PairState::digon) {
            BalanceResult r;
            r.cycle = canonicalized({{e.u, e.v}, {Sign::plus, Sign::minus}});
            return r;
        }
    }

    // BFS forest, labeling each vertex with the sign product of its tree path.
    std::vector<int> label(n, 0);  // 0 unvisited, +1 / -1
    std::vector<int> parent(n, -1);
    std::vector<Sign> parent_sign(n, Sign::plus);
    std::vector<int> depth(n, 0);
    std::vector<int> queue;

    for (int root = 0; root < n; ++root) {
        if (label[root] != 0) continue;
        label[root] = 1;
        queue.clear();
        queue.push_back(root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (const auto& arc : g.arcs(u)) {
                int v = arc.to;
                int expect = label[u] * (arc.sign == Sign::plus ? 1 : -1);
                if (label[v] == 0) {
                    label[v] = expect;
                    parent[v] = u;
                    parent_sign[v] = arc.sign;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (label[v] != expect) {
                    // Conflict edge closes a negative cycle through the forest.
                    NegativeCycle cyc;
                    std::vector<int> pu, pv;
                    std::vector<Sign> su, sv;
                    int a = u, b = v;
                    while (depth[a] > depth[b]) {
                        pu.push_back(a);
                        su.push_back(parent_sign[a]);
                        a = parent[a];
                    }
                    while (depth[b] > depth[a]) {
                        pv.push_back(b);
                        sv.push_back(parent_sign[b]);
                        b = parent[b];
                    }
                    while (a != b) {
                        pu.push_back(a);
                        su.push_back(parent_sign[a]);
                        a = parent[a];
                        pv.push_back(b);
                        sv.push_back(parent_sign[b]);
                        b = parent[b];
                    }
                    // cycle: u ..up.. lca ..down.. v, then edge v-u
                    cyc.vertices = pu;
                    cyc.vertices.push_back(a);
                    cyc.signs = su;
                    for (std::size_t i = pv.size(); i-- > 0;) {
                        cyc.signs.push_back(sv[i]);
                        cyc.vertices.push_back(pv[i]);
                    }
                    cyc.signs.push_back(arc.sign);
                    BalanceResult r;
                    r.cycle = canonicalized(std::move(cyc));
                    return r;
                }
            }
        }
    }

    std::vector<int> flip;
    for (int v = 0; v < n; ++v)
        if (label[v] < 0) flip.push_back(v);
    BalanceResult r;
    r.switching = std::move(flip);
    return r;
}

bool is_all_positive(const SignedGraph& g) {
    for (const auto& e : g.edges())
        if (e.sign == Sign::minus) return false;
    return true;
}

}  // namespace sgr
