#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgr/coloring.hpp"
#include "sgr/girth.hpp"
#include "sgr/kneser.hpp"
#include "sgr/mycielskian.hpp"
#include "sgr/oracles.hpp"
#include "sgr/random.hpp"

using namespace sgr;

namespace {

SignedGraph from_pair_code(int n, std::uint64_t code, bool allow_digons) {
    std::vector<SignedEdge> edges;
    int radix = allow_digons ? 4 : 2;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int st = static_cast<int>(code % radix);
            code /= radix;
            if (allow_digons) {
                if (st & 1) edges.push_back({u, v, Sign::plus});
                if (st & 2) edges.push_back({u, v, Sign::minus});
            } else if (st) {
                edges.push_back({u, v, Sign::plus});
            }
        }
    return SignedGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("balanced sets") {
    SignedGraph k5 = make_all_negative_clique(5);
    CHECK(is_balanced_set(k5, {}).balanced);
    CHECK(is_balanced_set(k5, {0, 3}).balanced);
    CHECK_FALSE(is_balanced_set(k5, {0, 1, 2}).balanced);
    CHECK_FALSE(is_balanced_set(k5, {0, 1, 2, 4}).balanced);

    SignedGraph dig = make_digon();
    SetBalance r = is_balanced_set(dig, {0, 1});
    CHECK_FALSE(r.balanced);
    CHECK(r.cycle->length() == 2);

    // unbalance witness carries original vertex ids
    SignedGraph g(6, {{3, 4, Sign::minus}, {4, 5, Sign::minus}, {3, 5, Sign::minus}});
    SetBalance s = is_balanced_set(g, {3, 4, 5});
    REQUIRE_FALSE(s.balanced);
    CHECK(s.cycle->vertices == std::vector<int>{3, 4, 5});
}

TEST_CASE("coloring checks") {
    SignedGraph k5 = make_all_negative_clique(5);
    CHECK(check_coloring(k5, {1, 1, 2, 2, 3}, 3));
    CHECK_FALSE(check_coloring(k5, {1, 1, 1, 2, 2}, 2));  // class 1 is a negative triangle
    CHECK_FALSE(check_coloring(k5, {1, 1, 2, 2, 4}, 3));  // color above palette
    CHECK_THROWS_AS(check_coloring(k5, {1, 1, 2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_coloring(k5, {1, 1, 0, 2, 2}, 3), std::invalid_argument);

    BalancedColoring bc = make_balanced_coloring(k5, {1, 1, 2, 2, 3}, 3);
    CHECK(bc.palette == 3);
    CHECK(bc.class_switchings.size() == 3);
    CHECK_THROWS(make_balanced_coloring(k5, {1, 1, 1, 2, 2}, 2));
}

TEST_CASE("exact balanced chromatic number") {
    CHECK(balanced_chromatic_number(SignedGraph(0, {})).value == 0);
    CHECK(balanced_chromatic_number(SignedGraph(4, {})).value == 1);
    CHECK(balanced_chromatic_number(make_all_negative_clique(5)).value == 3);
    CHECK(balanced_chromatic_number(make_digon()).value == 2);

    ChiBResult ss64 = balanced_chromatic_number(reduce_labeled(schrijver_signed(6, 4)).graph);
    CHECK(ss64.value == 3);
    CHECK(ss64.complete);

    // witness always validates
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        SignedGraph g = random_signed_graph(rng, 1 + rng.below(9), 0.45);
        ChiBResult chi = balanced_chromatic_number(g);
        REQUIRE(chi.complete);
        CHECK(check_coloring(g, chi.coloring, chi.value));
        CHECK(chi.value == chi_b_by_partitions(g));
    }

    // isolated vertices never raise chi_b
    SignedGraph padded(8, make_all_negative_clique(5).edges());
    CHECK(balanced_chromatic_number(padded).value == 3);

    // budget exhaustion is a marked result
    ChiBResult starved = balanced_chromatic_number(make_all_negative_clique(9), {10});
    CHECK_FALSE(starved.complete);
    CHECK(starved.value >= starved.lower_bound);
}

TEST_CASE("partition oracle") {
    CHECK(chi_b_by_partitions(make_all_negative_clique(3)) == 2);
    CHECK(chi_b_by_partitions(make_digon()) == 2);
    CHECK(chi_b_by_partitions(make_all_negative_clique(5)) == 3);
    CHECK(chi_b_by_partitions(SignedGraph(0, {})) == 0);
    CHECK_THROWS_AS(chi_b_by_partitions(SignedGraph(10, {})), std::invalid_argument);

    // agreement with branch and bound, exhaustive over small digon-free graphs
    for (int n = 1; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::uint64_t total = 1;
        for (int i = 0; i < pairs; ++i) total *= 4;
        for (std::uint64_t code = 0; code < total; ++code) {
            SignedGraph g = from_pair_code(n, code, true);
            REQUIRE(balanced_chromatic_number(g).value == chi_b_by_partitions(g));
        }
    }
}

TEST_CASE("maximum balanced set") {
    SignedGraph k5 = make_all_negative_clique(5);
    SubsetSearch b = max_balanced_set(k5);
    CHECK(b.vertices == std::vector<int>{0, 1});  // lexicographically smallest maximum

    SignedGraph balanced(4, {{0, 1, Sign::minus}, {1, 2, Sign::minus}});
    CHECK(max_balanced_set(balanced).vertices == std::vector<int>{0, 1, 2, 3});

    CHECK(max_balanced_set(make_negative_cycle(4)).vertices.size() == 3);

    SubsetSearch starved = max_balanced_set(make_all_negative_clique(8), {5});
    CHECK_FALSE(starved.complete);
}

TEST_CASE("maximum balanced p-colorable subgraph") {
    SignedGraph k5 = make_all_negative_clique(5);
    SubsetSearch two = max_balanced_p_colorable_subgraph(k5, 2);
    CHECK(two.vertices.size() == 4);
    {
        std::vector<int> colors(5, 0);
        int used = 0;
        for (int v : two.vertices) {
            colors[v] = two.coloring[v];
            used = std::max(used, two.coloring[v]);
        }
        CHECK(used <= 2);
        SignedGraph sub = induced(k5, two.vertices);
        std::vector<int> sub_colors;
        for (int v : two.vertices) sub_colors.push_back(two.coloring[v]);
        CHECK(check_coloring(sub, sub_colors, 2));
    }

    CHECK(max_balanced_p_colorable_subgraph(k5, 3).vertices.size() == 5);  // p >= chi_b
    CHECK(max_balanced_p_colorable_subgraph(k5, 1).vertices ==
          max_balanced_set(k5).vertices);
}

TEST_CASE("ordinary chromatic number") {
    CHECK(chromatic_number(complete_graph(5)).value == 5);
    CHECK(chromatic_number(cycle_graph(5)).value == 3);
    CHECK(chromatic_number(cycle_graph(6)).value == 2);
    CHECK(chromatic_number(PlainGraph(3, {})).value == 1);

    // the 11-vertex triangle-free 4-chromatic graph, as the 2-level cone over C_5
    PlainGraph grotzsch = underlying(
        generalized_mycielskian(to_all_negative(cycle_graph(5)), 2));
    CHECK(grotzsch.vertex_count() == 11);
    CHECK(chromatic_number(grotzsch).value == 4);
}

TEST_CASE("chi_b invariances and monotonicity") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + rng.below(7);
        SignedGraph g = random_signed_graph(rng, n, 0.45);
        int chi = balanced_chromatic_number(g).value;

        SignedGraph s = permuted(switched(g, random_subset(rng, n)), random_permutation(rng, n));
        CHECK(balanced_chromatic_number(s).value == chi);

        // vertex deletion drops chi_b by at most one
        std::vector<int> rest;
        for (int v = 1; v < n; ++v) rest.push_back(v);
        int chi_minus = balanced_chromatic_number(induced(g, rest)).value;
        CHECK(chi_minus <= chi);
        CHECK(chi <= chi_minus + 1);
    }
}

TEST_CASE("negative-subgraph chromatic bound") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        SignedGraph g = random_signed_graph(rng, 1 + rng.below(8), 0.5);
        int chi_b = balanced_chromatic_number(g).value;
        int chi_neg = g.vertex_count() == 0 ? 0 : chromatic_number(negative_subgraph(g)).value;
        CHECK(chi_b <= chi_neg);
    }
}

TEST_CASE("all-negative graphs: chi_b equals ceil(chi/2), exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (1ULL << pairs); ++code) {
            // build a plain graph from the bitmask
            std::vector<std::pair<int, int>> edges;
            std::uint64_t c = code;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (c & 1) edges.emplace_back(u, v);
                    c >>= 1;
                }
            PlainGraph plain(n, std::move(edges));
            int chi = chromatic_number(plain).value;
            int chi_b = balanced_chromatic_number(to_all_negative(plain)).value;
            REQUIRE(chi_b == (chi + 1) / 2);
        }
    }
}
