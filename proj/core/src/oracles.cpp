#include "sgr/oracles.hpp"

#include <stdexcept>

namespace sgr {

bool oracle_balanced(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("oracle_balanced: guarded to |V| <= 20");
    if (g.edge_count() == 0) return true;
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t sigma = 0; sigma < total; ++sigma) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            int flip = static_cast<int>((sigma >> e.u & 1) ^ (sigma >> e.v & 1));
            Sign after = flip ? flipped(e.sign) : e.sign;
            if (after == Sign::minus) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

struct CycleHunter {
    const SignedGraph& g;
    int best;  // current shortest negative length found; INT16-ish sentinel
    std::vector<char> on_path;
    std::vector<int> path;
    int forced_minus;  // parity of forced negative steps on the path
    int digons_used;

    explicit CycleHunter(const SignedGraph& graph) : g(graph), best(1 << 20) {
        on_path.assign(g.vertex_count(), 0);
        forced_minus = 0;
        digons_used = 0;
    }

    // negative sign achievable over the pair states collected plus one more
    static bool achievable_negative(int forced_minus, int digons) {
        return digons > 0 || (forced_minus & 1) == 1;
    }

    void step(int start) {
        int v = path.back();
        for (int w : g.neighbors(v)) {
            if (w < start) continue;
            PairState st = g.pair_state(v, w);
            if (w == start && path.size() >= 3) {
                int fm = forced_minus + (st == PairState::minus ? 1 : 0);
                int dg = digons_used + (st == PairState::digon ? 1 : 0);
                if (achievable_negative(fm, dg)) {
                    best = std::min(best, static_cast<int>(path.size()));
                }
                continue;
            }
            if (on_path[w]) continue;
            if (static_cast<int>(path.size()) + 1 >= best) continue;  // cannot beat
            on_path[w] = 1;
            path.push_back(w);
            forced_minus += (st == PairState::minus ? 1 : 0);
            digons_used += (st == PairState::digon ? 1 : 0);
            step(start);
            digons_used -= (st == PairState::digon ? 1 : 0);
            forced_minus -= (st == PairState::minus ? 1 : 0);
            path.pop_back();
            on_path[w] = 0;
        }
    }
};

}  // namespace

std::optional<int> oracle_negative_girth(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("oracle_negative_girth: guarded to |V| <= 16");
    for (const auto& e : g.edges())
        if (g.pair_state(e.u, e.v) == PairState::digon) return 2;

    CycleHunter hunter(g);
    for (int s = 0; s < n && hunter.best > 3; ++s) {
        hunter.on_path[s] = 1;
        hunter.path = {s};
        hunter.step(s);
        hunter.on_path[s] = 0;
    }
    if (hunter.best >= (1 << 20)) return std::nullopt;
    return hunter.best;
}

}  // namespace sgr
