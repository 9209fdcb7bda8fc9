#include "sgr/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgr {

namespace {

// Canonical labeling of a small vertex-colored graph by individualization
// and refinement. Automorphisms discovered at equal-code leaves drive orbit
// pruning; the canonical labeling is the one with the smallest adjacency
// code among the leaves explored.
class Canonicalizer {
public:
    Canonicalizer(int n, std::vector<std::vector<char>> adj, std::vector<int> color)
        : n_(n), adj_(std::move(adj)), color_(std::move(color)) {}

    // lab[i] = node placed at canonical position i
    std::vector<int> run() {
        Partition cells = initial_partition();
        std::vector<int> path;
        search(cells, path);
        return best_lab_;
    }

private:
    using Partition = std::vector<std::vector<int>>;

    int n_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> color_;
    std::vector<int> best_lab_;
    std::string best_code_;
    bool have_best_ = false;
    std::vector<std::vector<int>> autos_;
    std::uint64_t nodes_ = 0;
    static constexpr std::uint64_t kMaxNodes = 4'000'000;

    Partition initial_partition() const {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n_; ++v) by_color[color_[v]].push_back(v);
        Partition cells;
        for (auto& [c, nodes] : by_color) cells.push_back(std::move(nodes));
        return cells;
    }

    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
                for (std::size_t ti = 0; ti < cells.size() && !changed; ++ti) {
                    if (cells[ti].size() <= 1) continue;
                    std::map<int, std::vector<int>> groups;
                    for (int v : cells[ti]) {
                        int cnt = 0;
                        for (int s : cells[si]) cnt += adj_[v][s];
                        groups[cnt].push_back(v);
                    }
                    if (groups.size() <= 1) continue;
                    Partition next;
                    next.reserve(cells.size() + groups.size() - 1);
                    for (std::size_t i = 0; i < cells.size(); ++i) {
                        if (i == ti) {
                            for (auto& [cnt, nodes] : groups) next.push_back(std::move(nodes));
                        } else {
                            next.push_back(std::move(cells[i]));
                        }
                    }
                    cells = std::move(next);
                    changed = true;
                }
            }
        }
    }

    std::string code_of(const std::vector<int>& lab) const {
        std::string code;
        code.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) code.push_back(adj_[lab[i]][lab[j]] ? '1' : '0');
        return code;
    }

    // Orbit pruning: candidate u is redundant when some product of recorded
    // automorphisms that fix the individualized path pointwise maps u onto an
    // already-processed sibling.
    bool pruned(int u, const std::vector<int>& processed, const std::vector<int>& path) const {
        if (processed.empty() || autos_.empty()) return false;
        std::vector<int> uf(n_);
        for (int v = 0; v < n_; ++v) uf[v] = v;
        auto find = [&](int v) {
            while (uf[v] != v) v = uf[v] = uf[uf[v]];
            return v;
        };
        for (const auto& gamma : autos_) {
            bool fixes_path = true;
            for (int pv : path)
                if (gamma[pv] != pv) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(gamma[v]);
                if (a != b) uf[a] = b;
            }
        }
        int ru = find(u);
        for (int v : processed)
            if (find(v) == ru) return true;
        return false;
    }

    void search(Partition cells, std::vector<int>& path) {
        if (++nodes_ > kMaxNodes)
            throw std::runtime_error("canonical_form: refinement search budget exceeded");
        refine(cells);

        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            std::vector<int> lab;
            lab.reserve(n_);
            for (const auto& cell : cells) lab.push_back(cell.front());
            std::string code = code_of(lab);
            if (!have_best_ || code < best_code_) {
                best_code_ = std::move(code);
                best_lab_ = std::move(lab);
                have_best_ = true;
            } else if (code == best_code_ && lab != best_lab_) {
                std::vector<int> gamma(n_);
                for (int i = 0; i < n_; ++i) gamma[best_lab_[i]] = lab[i];
                autos_.push_back(std::move(gamma));
            }
            return;
        }

        std::vector<int> candidates = cells[target];
        std::sort(candidates.begin(), candidates.end());
        std::vector<int> processed;
        for (int v : candidates) {
            if (pruned(v, processed, path)) continue;
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[i]);
                }
            }
            path.push_back(v);
            search(std::move(child), path);
            path.pop_back();
            processed.push_back(v);
        }
    }
};

char state_digit(PairState st) { return static_cast<char>('0' + static_cast<int>(st)); }

std::string form_text(const SignedGraph& g) {
    std::string text = std::to_string(g.vertex_count()) + ":";
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j) text.push_back(state_digit(g.pair_state(i, j)));
    return text;
}

}  // namespace

SignedGraph canonical_representative(const SignedGraph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw std::invalid_argument("canonical_representative: order exceeds the size guard");
    if (n == 0) return SignedGraph(0, {});

    // Marked double cover as a vertex-colored graph: fibers v, v+n; the pair
    // is tied together through a subdivision node 2n+v of a second color.
    const int cover_n = 3 * n;
    std::vector<std::vector<char>> adj(cover_n, std::vector<char>(cover_n, 0));
    auto connect = [&](int a, int b) { adj[a][b] = adj[b][a] = 1; };
    for (const auto& e : g.edges()) {
        if (e.sign == Sign::plus) {
            connect(e.u, e.v);
            connect(e.u + n, e.v + n);
        } else {
            connect(e.u, e.v + n);
            connect(e.v, e.u + n);
        }
    }
    std::vector<int> color(cover_n, 0);
    for (int v = 0; v < n; ++v) {
        connect(v, 2 * n + v);
        connect(v + n, 2 * n + v);
        color[2 * n + v] = 1;
    }

    std::vector<int> lab = Canonicalizer(cover_n, std::move(adj), std::move(color)).run();
    std::vector<int> pos(cover_n);
    for (int i = 0; i < cover_n; ++i) pos[lab[i]] = i;

    // Base order by the smaller canonical position of the fiber pair; the
    // earlier pole of each pair becomes the positive one (a switching).
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    auto key = [&](int v) { return std::min(pos[v], pos[v + n]); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

    std::vector<int> rep(n);  // cover node acting as the + pole of base vertex v
    for (int v = 0; v < n; ++v) rep[v] = pos[v] < pos[v + n] ? v : v + n;
    auto mate = [&](int x) { return x < n ? x + n : x - n; };

    std::vector<SignedEdge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int a = order[i], b = order[j];
            if (g.pair_state(a, b) == PairState::none) continue;
            bool plus_edge, minus_edge;
            {
                // read adjacency through the original cover structure
                int ra = rep[a], rb = rep[b];
                auto has_cover_edge = [&](int x, int y) {
                    int bx = x < n ? x : x - n, by = y < n ? y : y - n;
                    bool same_fiber = (x < n) == (y < n);
                    PairState st = g.pair_state(bx, by);
                    if (same_fiber) return st == PairState::plus || st == PairState::digon;
                    return st == PairState::minus || st == PairState::digon;
                };
                plus_edge = has_cover_edge(ra, rb);
                minus_edge = has_cover_edge(ra, mate(rb));
            }
            if (plus_edge) edges.push_back({i, j, Sign::plus});
            if (minus_edge) edges.push_back({i, j, Sign::minus});
        }
    }
    return SignedGraph(n, std::move(edges));
}

CanonicalForm canonical_form(const SignedGraph& g, int max_n) {
    return CanonicalForm{form_text(canonical_representative(g, max_n))};
}

SignedGraph graph_from_form(const CanonicalForm& form) {
    auto colon = form.text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("graph_from_form: malformed text");
    int n = std::stoi(form.text.substr(0, colon));
    std::string digits = form.text.substr(colon + 1);
    if (digits.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
        throw std::invalid_argument("graph_from_form: digit count mismatch");
    std::vector<SignedEdge> edges;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++idx) {
            switch (digits[idx]) {
                case '0': break;
                case '1': edges.push_back({i, j, Sign::plus}); break;
                case '2': edges.push_back({i, j, Sign::minus}); break;
                case '3':
                    edges.push_back({i, j, Sign::plus});
                    edges.push_back({i, j, Sign::minus});
                    break;
                default: throw std::invalid_argument("graph_from_form: bad digit");
            }
        }
    }
    return SignedGraph(n, std::move(edges));
}

}  // namespace sgr
