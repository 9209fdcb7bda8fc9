#include "sgr/search.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sgr/coloring.hpp"
#include "sgr/double_cover.hpp"
#include "sgr/girth.hpp"
#include "sgr/intmath.hpp"
#include "sgr/kneser.hpp"
#include "sgr/mycielskian.hpp"
#include "sgr/parallel.hpp"

namespace sgr {

namespace {

// Shortest negative cycle through `v`, as a capped BFS pos(v) -> neg(v) in
// the double cover; true when its length is below `cap`.
bool has_short_negative_cycle_through(const SignedGraph& g, int v, int cap) {
    DoubleCover cover = double_cover(g);
    std::vector<int> dist(2 * g.vertex_count(), -1), queue;
    dist[cover.pos(v)] = 0;
    queue.push_back(cover.pos(v));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (dist[u] + 1 >= cap) break;  // deeper layers cannot witness < cap
        for (int w : cover.graph.neighbors(u)) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            if (w == cover.neg(v)) return true;
            queue.push_back(w);
        }
    }
    return false;
}

SignedGraph extend(const SignedGraph& parent, const std::vector<PairState>& states) {
    const int n = parent.vertex_count();
    std::vector<SignedEdge> edges = parent.edges();
    for (int u = 0; u < n; ++u) {
        switch (states[u]) {
            case PairState::none: break;
            case PairState::plus: edges.push_back({u, n, Sign::plus}); break;
            case PairState::minus: edges.push_back({u, n, Sign::minus}); break;
            case PairState::digon:
                edges.push_back({u, n, Sign::plus});
                edges.push_back({u, n, Sign::minus});
                break;
        }
    }
    return SignedGraph(n + 1, std::move(edges));
}

}  // namespace

std::string SearchReport::to_csv() const {
    std::ostringstream os;
    os << "n,girth,chi_b,bound_low,bound_high,status\n";
    for (const auto& v : per_n) {
        os << v.n << ",";
        if (v.witness) {
            NegativeGirth girth = negative_girth(*v.witness);
            if (girth.finite())
                os << girth.length();
            else
                os << "inf";
            os << "," << balanced_chromatic_number(*v.witness).value;
        } else {
            os << ",";
        }
        os << "," << girth_min << "," << chi_min << ",";
        if (v.witness)
            os << "witness";
        else
            os << (v.exhaustive ? "none-exhaustive" : "none-partial");
        os << "\n";
    }
    return os.str();
}

SearchReport minimum_order_search(int girth_min, int chi_min, int n_max,
                                  const SearchBudget& budget, int threads,
                                  const std::string& checkpoint_path) {
    if (girth_min < 2 || chi_min < 2)
        throw std::invalid_argument("minimum_order_search: need girth_min >= 2, chi_min >= 2");
    if (n_max < 1) throw std::invalid_argument("minimum_order_search: need n_max >= 1");

    SearchReport report;
    report.girth_min = girth_min;
    report.chi_min = chi_min;
    report.n_max = n_max;

    std::vector<PairState> alphabet = {PairState::none, PairState::plus, PairState::minus};
    if (girth_min <= 2) alphabet.push_back(PairState::digon);

    std::vector<SignedGraph> frontier;
    frontier.push_back(SignedGraph(1, {}));

    for (int n = 1; n <= n_max; ++n) {
        MinOrderVerdict verdict;
        verdict.n = n;
        verdict.classes_visited = frontier.size();
        verdict.exhaustive = !report.budget_exhausted;

        for (const auto& g : frontier) {
            ChiBResult chi = balanced_chromatic_number(g, budget);
            if (!chi.complete) {
                report.budget_exhausted = true;
                verdict.exhaustive = false;
                continue;
            }
            if (chi.value >= chi_min) {
                ++verdict.witness_classes;
                if (!verdict.witness) {
                    verdict.witness = g;
                    verdict.witness_form = canonical_form(g);
                }
            }
        }
        if (verdict.witness && !report.minimum_order) report.minimum_order = n;
        report.per_n.push_back(verdict);

        if (!checkpoint_path.empty()) {
            std::ofstream out(checkpoint_path);
            if (!out) throw std::runtime_error("minimum_order_search: cannot write checkpoint");
            for (const auto& g : frontier) out << canonical_form(g).text << "\n";
        }
        if (n == n_max || report.budget_exhausted) break;

        // children = every parent extended by one vertex over the alphabet
        const std::size_t vector_count = ipow_capped(alphabet.size(), n);
        const std::size_t total = frontier.size() * vector_count;
        if (report.nodes + total > budget.max_nodes) {
            report.budget_exhausted = true;
            break;
        }
        report.nodes += total;

        std::vector<std::map<std::string, SignedGraph>> chunk_found(
            std::max<std::size_t>(1, std::min<std::size_t>(total, threads < 1 ? 1 : threads)));
        parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end, int chunk) {
            std::vector<PairState> states(n);
            for (std::size_t t = begin; t < end; ++t) {
                std::size_t parent_idx = t / vector_count;
                std::size_t code = t % vector_count;
                for (int u = 0; u < n; ++u) {
                    states[u] = alphabet[code % alphabet.size()];
                    code /= alphabet.size();
                }
                SignedGraph child = extend(frontier[parent_idx], states);
                if (has_short_negative_cycle_through(child, n, girth_min)) continue;
                CanonicalForm form = canonical_form(child);
                chunk_found[chunk].emplace(form.text, graph_from_form(form));
            }
        });
        std::map<std::string, SignedGraph> merged;
        for (auto& cf : chunk_found) merged.merge(cf);
        frontier.clear();
        for (auto& [text, graph] : merged) frontier.push_back(std::move(graph));
    }
    return report;
}

std::vector<HarnessRow> girth_bounds_sweep(HarnessFamily family, int p,
                                           const std::vector<int>& orders,
                                           const SearchBudget& budget, int threads) {
    if (p < 2) throw std::invalid_argument("girth_bounds_sweep: need p >= 2");
    constexpr int kExactChiCap = 20;

    std::vector<HarnessRow> rows;
    auto push_row = [&](const SignedGraph& g, std::optional<int> chi_known) {
        HarnessRow row;
        row.n = g.vertex_count();
        NegativeGirth girth = negative_girth(g, threads);
        if (girth.finite()) row.girth = girth.length();
        if (chi_known) {
            row.chi_b = chi_known;
        } else if (g.vertex_count() <= kExactChiCap) {
            ChiBResult chi = balanced_chromatic_number(g, budget);
            if (chi.complete) row.chi_b = chi.value;
        }
        row.bound_low = ceil_root_over_e(row.n, p - 1);
        row.bound_high = 2ULL * (p - 1) * q_root(std::max(1, row.n), p - 1);
        bool relevant = row.chi_b.has_value() ? *row.chi_b >= p : true;
        bool low_ok = !row.girth.has_value() ||
                      static_cast<std::uint64_t>(*row.girth) >= row.bound_low;
        if (!relevant)
            row.status = "chi-below-p";
        else if (!low_ok)
            row.status = "below-lower-bound";
        else
            row.status = "ok";
        rows.push_back(std::move(row));
    };

    switch (family) {
        case HarnessFamily::extremal_construction:
            for (int n : orders) {
                GirthExtremalWitness w = max_girth_construction(p, n);
                std::optional<int> chi;
                if (w.core_order <= 15) {
                    ChiBResult c = balanced_chromatic_number(w.graph, budget);
                    if (c.complete) chi = c.value;
                }
                push_row(w.graph, chi);
            }
            break;
        case HarnessFamily::negative_cliques:
            for (int n : orders) push_row(make_all_negative_clique(n), (n + 1) / 2);
            break;
        case HarnessFamily::mycielskian_iterates: {
            SignedGraph g = make_negative_cycle(4);
            push_row(g, 2);
            for (int step = 0; step < 2; ++step) {
                g = generalized_mycielskian(g, 3);
                push_row(g, std::nullopt);
            }
            break;
        }
    }
    return rows;
}

std::string harness_csv(const std::vector<HarnessRow>& rows) {
    std::ostringstream os;
    os << "n,girth,chi_b,bound_low,bound_high,status\n";
    for (const auto& r : rows) {
        os << r.n << ",";
        if (r.girth)
            os << *r.girth;
        else
            os << "inf";
        os << ",";
        if (r.chi_b) os << *r.chi_b;
        os << "," << r.bound_low << "," << r.bound_high << "," << r.status << "\n";
    }
    return os.str();
}

}  // namespace sgr
