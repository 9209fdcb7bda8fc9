#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "sgr/canonical.hpp"
#include "sgr/coloring.hpp"
#include "sgr/girth.hpp"
#include "sgr/mycielskian.hpp"
#include "sgr/random.hpp"
#include "sgr/search.hpp"

using namespace sgr;

namespace {

SignedGraph from_pair_code(int n, std::uint64_t code) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (code & 3) {
                case 1: edges.push_back({u, v, Sign::plus}); break;
                case 2: edges.push_back({u, v, Sign::minus}); break;
                case 3:
                    edges.push_back({u, v, Sign::plus});
                    edges.push_back({u, v, Sign::minus});
                    break;
                default: break;
            }
            code >>= 2;
        }
    return SignedGraph(n, std::move(edges));
}

// orbit count under permutation x switching, straight from the definition
std::size_t brute_class_count(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<int> perm(n);
    std::set<std::uint64_t> minima;
    for (std::uint64_t code = 0; code < (1ULL << (2 * pairs)); ++code) {
        SignedGraph g = from_pair_code(n, code);
        std::uint64_t best = ~0ULL;
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            for (std::uint64_t sigma = 0; sigma < (1ULL << n); ++sigma) {
                std::vector<int> flips;
                for (int v = 0; v < n; ++v)
                    if (sigma >> v & 1) flips.push_back(v);
                SignedGraph h = permuted(switched(g, flips), perm);
                std::uint64_t c = 0;
                int bit = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        c |= static_cast<std::uint64_t>(h.pair_state(u, v)) << bit;
                        bit += 2;
                    }
                best = std::min(best, c);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        minima.insert(best);
    }
    return minima.size();
}

}  // namespace

TEST_CASE("leveled cone construction") {
    SignedGraph base = make_negative_cycle(4);
    SignedGraph m1 = generalized_mycielskian(base, 1);
    CHECK(m1.vertex_count() == 5);
    CHECK(m1.edge_count() == base.edge_count() + 4);  // base plus apex star
    for (int v = 0; v < 4; ++v) CHECK(m1.has_edge(v, 4, Sign::plus));

    SignedGraph m3 = generalized_mycielskian(base, 3);
    CHECK(m3.vertex_count() == 13);
    CHECK(m3.edge_count() == 24);  // 4 + 2*4*2 + 4

    // digons in the base propagate to digons across levels
    SignedGraph dig = generalized_mycielskian(make_digon(), 2);
    CHECK(dig.pair_state(0, 3) == PairState::digon);

    CHECK_THROWS_AS(generalized_mycielskian(base, 0), std::invalid_argument);
}

TEST_CASE("the 13-vertex witness meets its gate") {
    Myc13Outcome outcome = myc13_detailed();
    CHECK(outcome.gate_passed);
    CHECK(outcome.graph.vertex_count() == 13);
    CHECK(outcome.chi_b == 3);
    CHECK(outcome.girth == 4);
    CHECK(outcome.tried.size() == 4);  // every leveled-cone convention was measured
    CHECK(outcome.from_figure);

    CHECK(balanced_chromatic_number(myc13()).value == 3);
    CHECK(negative_girth(myc13()).length() == 4);
}

TEST_CASE("canonical form respects switching and relabeling") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + rng.below(10);
        SignedGraph g = random_signed_graph(rng, n, 0.4);
        SignedGraph h = permuted(switched(g, random_subset(rng, n)), random_permutation(rng, n));
        REQUIRE(canonical_form(g) == canonical_form(h));
    }

    // balance is a canonical-form invariant: an unbalanced triangle and a
    // balanced one get distinct forms
    SignedGraph unbalanced = make_all_negative_clique(3);
    SignedGraph balanced(3, {{0, 1, Sign::minus}, {1, 2, Sign::minus}, {0, 2, Sign::plus}});
    CHECK_FALSE(canonical_form(unbalanced) == canonical_form(balanced));

    // representative reconstructs to an equivalent graph
    SignedGraph rep = canonical_representative(unbalanced);
    CHECK(canonical_form(rep) == canonical_form(unbalanced));
    CHECK(graph_from_form(canonical_form(unbalanced)) == rep);

    CHECK_THROWS_AS(canonical_form(SignedGraph(30, {})), std::invalid_argument);  // size guard
}

TEST_CASE("canonical form separates inequivalent graphs exhaustively (n <= 3)") {
    for (int n = 1; n <= 3; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::vector<SignedGraph> graphs;
        for (std::uint64_t code = 0; code < (1ULL << (2 * pairs)); ++code)
            graphs.push_back(from_pair_code(n, code));
        std::set<std::string> forms;
        for (const auto& g : graphs) forms.insert(canonical_form(g).text);
        CHECK(forms.size() == brute_class_count(n));
    }
}

TEST_CASE("enumeration visits every class once (n <= 4)") {
    // girth_min = 2 imposes no constraint, so per-level class counts must
    // match the brute-force orbit counts
    SearchReport rep = minimum_order_search(2, 9, 4);
    REQUIRE(rep.per_n.size() == 4);
    CHECK(rep.per_n[0].classes_visited == brute_class_count(1));
    CHECK(rep.per_n[1].classes_visited == brute_class_count(2));
    CHECK(rep.per_n[2].classes_visited == brute_class_count(3));
    CHECK(rep.per_n[3].classes_visited == brute_class_count(4));
    CHECK(rep.per_n[3].exhaustive);
}

TEST_CASE("minimum-order searches at desk scale") {
    SearchReport r32 = minimum_order_search(3, 2, 3);
    CHECK(r32.minimum_order == 3);
    REQUIRE(r32.per_n.back().witness.has_value());
    CHECK(canonical_form(*r32.per_n.back().witness) ==
          canonical_form(make_all_negative_clique(3)));
    // every witness revalidates
    NegativeGirth girth = negative_girth(*r32.per_n.back().witness);
    CHECK((!girth.finite() || girth.length() >= 3));
    CHECK(balanced_chromatic_number(*r32.per_n.back().witness).value >= 2);

    SearchReport r43 = minimum_order_search(4, 3, 4);
    CHECK_FALSE(r43.minimum_order.has_value());
    for (const auto& v : r43.per_n) CHECK(v.exhaustive);
}

TEST_CASE("search is deterministic across thread counts") {
    SearchReport a = minimum_order_search(3, 2, 4, {}, 1);
    SearchReport b = minimum_order_search(3, 2, 4, {}, 4);
    REQUIRE(a.per_n.size() == b.per_n.size());
    for (std::size_t i = 0; i < a.per_n.size(); ++i) {
        CHECK(a.per_n[i].classes_visited == b.per_n[i].classes_visited);
        CHECK(a.per_n[i].witness_classes == b.per_n[i].witness_classes);
        if (a.per_n[i].witness_form)
            CHECK(a.per_n[i].witness_form->text == b.per_n[i].witness_form->text);
    }
}

TEST_CASE("checkpoints are reconstructible canonical forms") {
    std::string path = "search_checkpoint_test.txt";
    SearchReport rep = minimum_order_search(3, 2, 3, {}, 1, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SignedGraph g = graph_from_form(CanonicalForm{line});
        CHECK(g.vertex_count() == 3);
        CHECK(canonical_form(g).text == line);
        ++count;
    }
    CHECK(count == rep.per_n.back().classes_visited);
    std::remove(path.c_str());
}

TEST_CASE("bound harness rows") {
    std::vector<int> orders = {5, 9, 13};
    auto rows = girth_bounds_sweep(HarnessFamily::extremal_construction, 2, orders);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.status == "ok");
        REQUIRE(row.girth.has_value());
        CHECK(*row.girth == row.n);  // the p=2 construction is a long negative cycle
        CHECK(row.chi_b == 2);
    }

    auto cliques = girth_bounds_sweep(HarnessFamily::negative_cliques, 3, {5, 7, 9});
    for (const auto& row : cliques) {
        CHECK(row.girth == 3);
        CHECK(row.status == "ok");
    }

    std::string csv = harness_csv(rows);
    CHECK(csv.rfind("n,girth,chi_b,bound_low,bound_high,status\n", 0) == 0);
    std::istringstream is(csv);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) ++lines;
    CHECK(lines == rows.size() + 1);
}
