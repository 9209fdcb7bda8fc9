#include "sgr/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgr {

namespace {

// Union-find with parity relative to the root, union by rank, no path
// compression so that merges roll back in O(1).
class ParityDsu {
public:
    void reset(int n) {
        parent_.assign(n, -1);
        rank_.assign(n, 0);
        parity_.assign(n, 0);
        ops_.clear();
    }

    std::pair<int, int> find(int v) const {
        int par = 0;
        while (parent_[v] >= 0) {
            par ^= parity_[v];
            v = parent_[v];
        }
        return {v, par};
    }

    // rel = 1 when u and v must take opposite switch states (negative edge).
    // Returns false (and records nothing) on a parity conflict.
    bool merge(int u, int v, int rel) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) return (pu ^ pv) == rel;
        if (rank_[ru] < rank_[rv]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        parent_[rv] = ru;
        parity_[rv] = pu ^ pv ^ rel;
        bool bumped = false;
        if (rank_[ru] == rank_[rv]) {
            ++rank_[ru];
            bumped = true;
        }
        ops_.push_back({rv, bumped ? ru : -1});
        return true;
    }

    std::size_t checkpoint() const { return ops_.size(); }

    void rollback(std::size_t mark) {
        while (ops_.size() > mark) {
            auto [child, bumped_root] = ops_.back();
            ops_.pop_back();
            parent_[child] = -1;
            parity_[child] = 0;
            if (bumped_root >= 0) --rank_[bumped_root];
        }
    }

private:
    std::vector<int> parent_, rank_, parity_;
    std::vector<std::pair<int, int>> ops_;
};

struct PColorSearcher {
    const SignedGraph& g;
    int p;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    std::vector<int> order;
    std::vector<int> color;  // by vertex id, 0 = unassigned
    std::vector<ParityDsu> dsu;
    std::vector<int> solution;

    PColorSearcher(const SignedGraph& graph, int palette, std::uint64_t budget)
        : g(graph), p(palette), max_nodes(budget) {
        order = degeneracy_order(underlying(g));
        color.assign(g.vertex_count(), 0);
        dsu.resize(p);
        for (auto& d : dsu) d.reset(g.vertex_count());
    }

    bool try_assign(int v, int c, std::size_t& mark) {
        mark = dsu[c - 1].checkpoint();
        for (const auto& arc : g.arcs(v)) {
            if (color[arc.to] != c) continue;
            if (!dsu[c - 1].merge(v, arc.to, arc.sign == Sign::minus ? 1 : 0)) {
                dsu[c - 1].rollback(mark);
                return false;
            }
        }
        color[v] = c;
        return true;
    }

    void unassign(int v, int c, std::size_t mark) {
        color[v] = 0;
        dsu[c - 1].rollback(mark);
    }

    bool dfs(std::size_t idx, int used) {
        if (idx == order.size()) {
            solution = color;
            return true;
        }
        if (++nodes > max_nodes) {
            out_of_budget = true;
            return false;
        }
        int v = order[idx];
        int limit = std::min(used + 1, p);
        for (int c = 1; c <= limit; ++c) {
            std::size_t mark;
            if (!try_assign(v, c, mark)) continue;
            if (dfs(idx + 1, std::max(used, c))) return true;
            unassign(v, c, mark);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

std::vector<int> degeneracy_order(const PlainGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n), removed(n, 0), removal;
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(g.neighbors(v).size());
    removal.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        removal.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

SetBalance is_balanced_set(const SignedGraph& g, const std::vector<int>& s) {
    std::vector<int> ids;
    SignedGraph sub = induced(g, s, &ids);
    BalanceResult r = is_balanced(sub);
    SetBalance out;
    out.balanced = r.balanced();
    if (r.balanced()) {
        for (int v : *r.switching) out.switching.push_back(ids[v]);
    } else {
        NegativeCycle c = *r.cycle;
        for (auto& v : c.vertices) v = ids[v];
        out.cycle = canonicalized(std::move(c));
    }
    return out;
}

bool check_coloring(const SignedGraph& g, const std::vector<int>& colors, int p) {
    if (static_cast<int>(colors.size()) != g.vertex_count())
        throw std::invalid_argument("check_coloring: coloring is not total on V");
    for (int c : colors)
        if (c < 1) throw std::invalid_argument("check_coloring: coloring is not total on V");
    int max_used = 0;
    for (int c : colors) max_used = std::max(max_used, c);
    if (max_used > p) return false;
    for (int c = 1; c <= max_used; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (colors[v] == c) cls.push_back(v);
        if (!cls.empty() && !is_balanced_set(g, cls).balanced) return false;
    }
    return true;
}

BalancedColoring make_balanced_coloring(const SignedGraph& g, std::vector<int> colors, int p) {
    if (!check_coloring(g, colors, p))
        throw std::invalid_argument("make_balanced_coloring: not a balanced p-coloring");
    BalancedColoring out;
    out.palette = p;
    out.class_switchings.resize(p);
    for (int c = 1; c <= p; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (colors[v] == c) cls.push_back(v);
        if (!cls.empty()) out.class_switchings[c - 1] = is_balanced_set(g, cls).switching;
    }
    out.colors = std::move(colors);
    return out;
}

PColoringSearch find_balanced_p_coloring(const SignedGraph& g, int p,
                                         const SearchBudget& budget) {
    if (p < 1) throw std::invalid_argument("find_balanced_p_coloring: palette must be >= 1");
    PColorSearcher s(g, p, budget.max_nodes);
    bool found = s.dfs(0, 0);
    PColoringSearch out;
    out.nodes = s.nodes;
    if (found) {
        out.found = true;
        out.coloring = std::move(s.solution);
    } else if (!s.out_of_budget) {
        out.found = false;
    }
    return out;
}

ChiBResult balanced_chromatic_number(const SignedGraph& g, const SearchBudget& budget) {
    ChiBResult out;
    const int n = g.vertex_count();
    if (n == 0) {
        out.value = 0;
        out.lower_bound = 0;
        return out;
    }

    // Greedy first-fit along the degeneracy order for an upper bound.
    std::vector<int> greedy;
    int greedy_palette = 0;
    {
        PColorSearcher s(g, n, ~0ULL);
        // first-fit: lowest feasible class, opening a new one when none fits
        for (int v : s.order) {
            int c = 1;
            for (;; ++c) {
                std::size_t mark;
                if (s.try_assign(v, c, mark)) break;
            }
            greedy_palette = std::max(greedy_palette, c);
        }
        greedy = s.color;
    }

    std::uint64_t used_nodes = 0;
    for (int p = 1; p < greedy_palette; ++p) {
        SearchBudget rest{budget.max_nodes - std::min(budget.max_nodes, used_nodes)};
        PColoringSearch attempt = find_balanced_p_coloring(g, p, rest);
        used_nodes += attempt.nodes;
        if (!attempt.found.has_value()) {
            out.value = greedy_palette;
            out.coloring = greedy;
            out.lower_bound = p;  // palettes below p are refuted
            out.complete = false;
            out.nodes = used_nodes;
            return out;
        }
        if (*attempt.found) {
            out.value = p;
            out.lower_bound = p;
            out.coloring = std::move(attempt.coloring);
            out.nodes = used_nodes;
            return out;
        }
    }
    out.value = greedy_palette;
    out.lower_bound = greedy_palette;
    out.coloring = std::move(greedy);
    out.nodes = used_nodes;
    return out;
}

int chi_b_by_partitions(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n > 9) throw std::invalid_argument("chi_b_by_partitions: guarded to |V| <= 9");
    if (n == 0) return 0;
    const int full = (1 << n) - 1;

    // balanced[mask] by trying every switching of the induced set: the edge
    // (u,v,s) forces sigma_u XOR sigma_v == [s is negative].
    std::vector<char> balanced_mask(full + 1, 0);
    for (int mask = 0; mask <= full; ++mask) {
        std::vector<SignedEdge> inside;
        for (const auto& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) inside.push_back(e);
        if (inside.empty()) {
            balanced_mask[mask] = 1;
            continue;
        }
        int low = mask & -mask;
        int rest = mask ^ low;  // sigma at the lowest vertex pinned to 0
        for (int sub = rest;; sub = (sub - 1) & rest) {
            bool ok = true;
            for (const auto& e : inside) {
                int su = (sub >> e.u) & 1, sv = (sub >> e.v) & 1;
                if ((su ^ sv) != (e.sign == Sign::minus ? 1 : 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                balanced_mask[mask] = 1;
                break;
            }
            if (sub == 0) break;
        }
    }

    std::vector<int> dp(full + 1, n + 1);
    dp[0] = 0;
    for (int mask = 1; mask <= full; ++mask) {
        int low = mask & -mask;
        for (int sub = mask;; sub = (sub - 1) & mask) {
            if ((sub & low) && balanced_mask[sub]) dp[mask] = std::min(dp[mask], dp[mask ^ sub] + 1);
            if (sub == 0) break;
        }
    }
    return dp[full];
}

namespace {

struct SubsetSearcher {
    const SignedGraph& g;
    int p;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    std::vector<int> color;  // 0 = excluded/undecided
    std::vector<int> chosen;
    std::vector<int> best_set;
    std::vector<int> best_color;
    std::vector<ParityDsu> dsu;

    SubsetSearcher(const SignedGraph& graph, int palette, std::uint64_t budget)
        : g(graph), p(palette), max_nodes(budget) {
        color.assign(g.vertex_count(), 0);
        dsu.resize(p);
        for (auto& d : dsu) d.reset(g.vertex_count());
    }

    void dfs(int v, int used) {
        if (++nodes > max_nodes) {
            out_of_budget = true;
            return;
        }
        const int n = g.vertex_count();
        if (v == n) {
            if (chosen.size() > best_set.size()) {
                best_set = chosen;
                best_color = color;
            }
            return;
        }
        // cannot strictly beat the incumbent
        if (chosen.size() + static_cast<std::size_t>(n - v) <= best_set.size()) return;

        int limit = std::min(used + 1, p);
        for (int c = 1; c <= limit && !out_of_budget; ++c) {
            std::size_t mark = dsu[c - 1].checkpoint();
            bool ok = true;
            for (const auto& arc : g.arcs(v)) {
                if (color[arc.to] != c) continue;
                if (!dsu[c - 1].merge(v, arc.to, arc.sign == Sign::minus ? 1 : 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[v] = c;
                chosen.push_back(v);
                dfs(v + 1, std::max(used, c));
                chosen.pop_back();
                color[v] = 0;
            }
            dsu[c - 1].rollback(mark);
        }
        if (!out_of_budget) dfs(v + 1, used);  // exclude v
    }
};

}  // namespace

SubsetSearch max_balanced_set(const SignedGraph& g, const SearchBudget& budget) {
    return max_balanced_p_colorable_subgraph(g, 1, budget);
}

SubsetSearch max_balanced_p_colorable_subgraph(const SignedGraph& g, int p,
                                               const SearchBudget& budget) {
    if (p < 1) throw std::invalid_argument("max_balanced_p_colorable_subgraph: p must be >= 1");
    SubsetSearcher s(g, p, budget.max_nodes);
    s.dfs(0, 0);
    SubsetSearch out;
    out.vertices = std::move(s.best_set);
    out.coloring = std::move(s.best_color);
    out.complete = !s.out_of_budget;
    out.nodes = s.nodes;
    return out;
}

namespace {

struct PlainColorSearcher {
    const PlainGraph& g;
    int p;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> order, color, solution;

    PlainColorSearcher(const PlainGraph& graph, int palette, std::uint64_t budget)
        : g(graph), p(palette), max_nodes(budget) {
        order = degeneracy_order(g);
        color.assign(g.vertex_count(), 0);
    }

    bool feasible(int v, int c) const {
        for (int w : g.neighbors(v))
            if (color[w] == c) return false;
        return true;
    }

    bool dfs(std::size_t idx, int used) {
        if (idx == order.size()) {
            solution = color;
            return true;
        }
        if (++nodes > max_nodes) {
            out_of_budget = true;
            return false;
        }
        int v = order[idx];
        int limit = std::min(used + 1, p);
        for (int c = 1; c <= limit; ++c) {
            if (!feasible(v, c)) continue;
            color[v] = c;
            if (dfs(idx + 1, std::max(used, c))) return true;
            color[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

ChromaticResult chromatic_number(const PlainGraph& g, const SearchBudget& budget) {
    ChromaticResult out;
    const int n = g.vertex_count();
    if (n == 0) return out;

    std::vector<int> greedy(n, 0);
    int greedy_palette = 0;
    for (int v : degeneracy_order(g)) {
        std::vector<char> taken(n + 2, 0);
        for (int w : g.neighbors(v))
            if (greedy[w]) taken[greedy[w]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        greedy[v] = c;
        greedy_palette = std::max(greedy_palette, c);
    }

    std::uint64_t used_nodes = 0;
    for (int p = 1; p < greedy_palette; ++p) {
        PlainColorSearcher s(g, p, budget.max_nodes - std::min(budget.max_nodes, used_nodes));
        bool found = s.dfs(0, 0);
        used_nodes += s.nodes;
        if (s.out_of_budget) {
            out.value = greedy_palette;
            out.coloring = greedy;
            out.complete = false;
            out.nodes = used_nodes;
            return out;
        }
        if (found) {
            out.value = p;
            out.coloring = std::move(s.solution);
            out.nodes = used_nodes;
            return out;
        }
    }
    out.value = greedy_palette;
    out.coloring = std::move(greedy);
    out.nodes = used_nodes;
    return out;
}

}  // namespace sgr
