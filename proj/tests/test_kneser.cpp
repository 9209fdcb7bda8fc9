#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sgr/canonical.hpp"
#include "sgr/coloring.hpp"
#include "sgr/girth.hpp"
#include "sgr/intmath.hpp"
#include "sgr/kneser.hpp"

using namespace sgr;

TEST_CASE("signed subset enumeration order and counts") {
    auto subs21 = signed_subsets(2, 1);
    REQUIRE(subs21.size() == 4);
    CHECK(subs21[0].to_string() == "1");
    CHECK(subs21[1].to_string() == "-1");
    CHECK(subs21[2].to_string() == "2");
    CHECK(subs21[3].to_string() == "-2");

    CHECK(signed_subsets(6, 4).size() == binomial(6, 4) * 16);  // 240
    CHECK(signed_subsets(3, 3).size() == 8);
    CHECK_THROWS_AS(signed_subsets(2, 3), std::invalid_argument);

    CHECK(SignedSubset::parse(6, "3,-1,2").to_string() == "-1,2,3");
}

TEST_CASE("alternation predicate") {
    CHECK(is_alternating(SignedSubset::parse(6, "1,-2,3,-4")));
    CHECK_FALSE(is_alternating(SignedSubset::parse(6, "1,2")));
    CHECK(is_alternating(SignedSubset::parse(6, "5")));
    CHECK(is_alternating(SignedSubset::parse(6, "-1,2,-5")));
}

TEST_CASE("girth closed form") {
    CHECK(kneser_girth_closed_form(6, 4) == 3);
    CHECK(kneser_girth_closed_form(5, 4) == 5);
    CHECK(kneser_girth_closed_form(8, 4) == 2);
    CHECK_FALSE(kneser_girth_closed_form(4, 4).has_value());
}

TEST_CASE("generators: counts, digons, balanced diagonal") {
    KneserLabeling ks64 = kneser_signed(6, 4);
    CHECK(ks64.graph.vertex_count() == 240);
    CHECK(negative_girth(ks64.graph).length() == 3);

    KneserLabeling ss64 = schrijver_signed(6, 4);
    CHECK(ss64.graph.vertex_count() == 30);
    for (const auto& s : ss64.subsets) CHECK(is_alternating(s));

    // KS(k,k) is a negative perfect matching, hence balanced
    for (int k = 1; k <= 4; ++k) {
        KneserLabeling diag = kneser_signed(k, k);
        CHECK_FALSE(negative_girth(diag.graph).finite());
    }

    // some pair carries both edges once n >= 2k
    bool digon_found = false;
    KneserLabeling ks42 = kneser_signed(4, 2);
    for (const auto& e : ks42.graph.edges())
        digon_found |= ks42.graph.pair_state(e.u, e.v) == PairState::digon;
    CHECK(digon_found);
    CHECK(negative_girth(ks42.graph).length() == 2);

    CHECK_THROWS_AS(kneser_signed(20, 10), std::invalid_argument);  // size guard
}

TEST_CASE("schrijver graphs are the alternating-induced subgraphs") {
    for (auto [n, k] : {std::pair{4, 2}, {5, 3}, {6, 4}, {5, 2}}) {
        KneserLabeling ks = kneser_signed(n, k);
        std::vector<int> keep;
        for (std::size_t i = 0; i < ks.subsets.size(); ++i)
            if (is_alternating(ks.subsets[i])) keep.push_back(static_cast<int>(i));
        SignedGraph via_induction = induced(ks.graph, keep);
        SignedGraph direct = schrijver_signed(n, k).graph;
        CHECK(via_induction.edges() == direct.edges());
        CHECK(via_induction.vertex_count() == direct.vertex_count());
    }
}

TEST_CASE("antitwins and reductions") {
    for (auto [n, k] : {std::pair{2, 1}, {3, 2}, {4, 2}, {5, 4}}) {
        KneserLabeling ks = kneser_signed(n, k);
        auto pairs = antitwin_pairs(ks.graph);
        CHECK(pairs.size() == ks.subsets.size() / 2);
        for (auto [x, y] : pairs) CHECK(ks.subsets[y] == negated(ks.subsets[x]));
    }

    CHECK(reduce_labeled(kneser_signed(6, 4)).graph.vertex_count() == 120);
    CHECK(reduce_labeled(schrijver_signed(6, 4)).graph.vertex_count() == 15);

    // generic reduction agrees in order with the label-aware one
    KneserLabeling ks32 = kneser_signed(3, 2);
    SignedGraph generic = reduce_double_switching(ks32.graph);
    CHECK(generic.vertex_count() == 6);
    CHECK(canonical_form(generic) == canonical_form(reduce_labeled(ks32).graph));

    CHECK_THROWS_AS(reduce_double_switching(make_all_negative_clique(3)), std::runtime_error);

    // replacing one representative with its antitwin yields a switching-
    // isomorphic reduction
    KneserLabeling red = reduce_labeled(ks32);
    const KneserLabeling& full = ks32;
    std::vector<int> keep;
    for (std::size_t i = 0; i < full.subsets.size(); ++i)
        if (full.subsets[i].elems.front() > 0) keep.push_back(static_cast<int>(i));
    // swap the first pair's representative
    keep[0] = full.index_of(negated(full.subsets[keep[0]]));
    std::sort(keep.begin(), keep.end());
    SignedGraph other = induced(full.graph, keep);
    CHECK(canonical_form(other) == canonical_form(red.graph));
}

TEST_CASE("reduced chi_b law at small parameters") {
    for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 4}, {4, 4}}) {
        SignedGraph reduced = reduce_labeled(schrijver_signed(n, k)).graph;
        CHECK(balanced_chromatic_number(reduced).value == n - k + 1);
    }
    // reduced Kneser graphs of order <= 12
    for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
        SignedGraph reduced = reduce_labeled(kneser_signed(n, k)).graph;
        CHECK(balanced_chromatic_number(reduced).value == n - k + 1);
    }
}

TEST_CASE("shift cycles") {
    ShiftCycle c54 = shift_cycle(5, 4);
    REQUIRE(c54.length() == 5);
    CHECK(c54.subsets[0].to_string() == "1,2,3,4");
    CHECK(c54.subsets[1].to_string() == "2,3,4,5");
    CHECK(c54.subsets[2].to_string() == "-1,3,4,5");
    CHECK(c54.subsets[3].to_string() == "-1,-2,4,5");
    CHECK(c54.subsets[4].to_string() == "-1,-2,-3,5");
    CHECK(c54.signs.back() == Sign::minus);
    validate_shift_cycle(5, 4, c54);

    // the witness is a genuine negative cycle of the built graph
    KneserLabeling ks54 = kneser_signed(5, 4);
    validate_negative_cycle(ks54.graph, to_vertex_cycle(c54, ks54));

    for (int n = 3; n <= 9; ++n)
        for (int k = n / 2 + 1; k < n; ++k) {
            ShiftCycle c = shift_cycle(n, k);
            validate_shift_cycle(n, k, c);
            CHECK(c.length() == *kneser_girth_closed_form(n, k));
        }

    CHECK_THROWS_AS(shift_cycle(8, 4), std::invalid_argument);  // n >= 2k
    CHECK_THROWS_AS(shift_cycle(4, 4), std::invalid_argument);
}

TEST_CASE("extremal construction") {
    GirthExtremalWitness w25 = max_girth_construction(2, 5);
    CHECK(w25.k == 4);
    CHECK(w25.graph.vertex_count() == 5);
    CHECK(w25.core_order == 5);
    CHECK(w25.predicted_girth_at_least == 5);
    CHECK(negative_girth(w25.graph).length() == 5);
    CHECK(balanced_chromatic_number(w25.graph).value == 2);

    GirthExtremalWitness w315 = max_girth_construction(3, 15);
    CHECK(w315.k == 4);
    CHECK(w315.core_order == 15);
    CHECK(w315.graph.vertex_count() == 15);
    CHECK(balanced_chromatic_number(w315.graph).value == 3);
    CHECK(meets_e_lower_bound(negative_girth(w315.graph).length(), 15, 2));

    // the maximality rule recomputed: k largest with C(p+k-1,k) <= n
    GirthExtremalWitness w39 = max_girth_construction(3, 9);
    CHECK(w39.k == 2);
    CHECK(w39.core_order == 6);
    CHECK(binomial(3 + w39.k - 1, w39.k) <= 9);
    CHECK(binomial(3 + w39.k, w39.k + 1) > 9);
    CHECK(w39.graph.vertex_count() == 9);

    CHECK_THROWS_AS(max_girth_construction(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(max_girth_construction(3, 2), std::invalid_argument);
}

TEST_CASE("girth inequality between Schrijver and Kneser graphs") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            NegativeGirth gk = negative_girth(kneser_signed(n, k).graph);
            NegativeGirth gs = negative_girth(schrijver_signed(n, k).graph);
            if (gs.finite()) {
                REQUIRE(gk.finite());
                CHECK(gs.length() >= gk.length());
            }
        }
}

TEST_CASE("integer root helpers") {
    CHECK(q_root(25, 2) == 5);
    CHECK(q_root(26, 2) == 6);
    CHECK(q_root(1000000, 3) == 100);
    CHECK(ceil_root_over_e(15, 2) == 2);
    CHECK(ceil_root_over_e(40, 1) == 15);  // ceil(40/e)
    CHECK(meets_e_lower_bound(2, 15, 2));
    CHECK_FALSE(meets_e_lower_bound(1, 15, 2));
}
