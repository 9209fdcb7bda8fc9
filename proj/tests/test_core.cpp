#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sgr/balance.hpp"
#include "sgr/distances.hpp"
#include "sgr/double_cover.hpp"
#include "sgr/girth.hpp"
#include "sgr/oracles.hpp"
#include "sgr/random.hpp"
#include "sgr/signed_graph.hpp"

using namespace sgr;

namespace {

SignedGraph positive_triangle() {
    return SignedGraph(3, {{0, 1, Sign::plus}, {1, 2, Sign::plus}, {0, 2, Sign::plus}});
}

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

}  // namespace

TEST_CASE("construction normalizes and validates") {
    SignedGraph g(3, {{2, 0, Sign::plus}, {0, 1, Sign::minus}});
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 1);
    CHECK(g.has_edge(0, 2, Sign::plus));
    CHECK(g.pair_state(1, 2) == PairState::none);

    CHECK_NOTHROW(make_digon());
    CHECK_THROWS_AS(SignedGraph(2, {{0, 0, Sign::plus}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 5, Sign::plus}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(2, {{0, 1, Sign::plus}, {1, 0, Sign::plus}}),
                    std::invalid_argument);
}

TEST_CASE("switching flips exactly the cut edges") {
    SignedGraph g = make_all_negative_clique(3);
    SignedGraph s = switched(g, {0});
    CHECK(s.pair_state(0, 1) == PairState::plus);
    CHECK(s.pair_state(0, 2) == PairState::plus);
    CHECK(s.pair_state(1, 2) == PairState::minus);

    CHECK(switched(g, {}) == g);
    CHECK(switched(g, {0, 1, 2}) == g);

    SignedGraph d = make_digon();
    CHECK(switched(d, {0}) == d);  // a digon maps to a digon
}

TEST_CASE("closed walk signs") {
    SignedGraph g = make_digon();
    CHECK(closed_walk_sign(g, {}) == Sign::plus);
    CHECK(closed_walk_sign(g, {{0, 1, Sign::plus}, {1, 0, Sign::minus}}) == Sign::minus);
    CHECK(closed_walk_sign(g, {{0, 1, Sign::plus}, {1, 0, Sign::plus}}) == Sign::plus);

    SignedGraph t = make_all_negative_clique(3);
    CHECK(closed_walk_sign(t, {{0, 1, Sign::minus}, {1, 2, Sign::minus}, {2, 0, Sign::minus}}) ==
          Sign::minus);
    CHECK_THROWS(closed_walk_sign(t, {{0, 1, Sign::minus}, {2, 0, Sign::minus}}));
    CHECK_THROWS(closed_walk_sign(t, {{0, 1, Sign::plus}, {1, 0, Sign::plus}}));
}

TEST_CASE("balance detection with validated witnesses") {
    BalanceResult pos = is_balanced(positive_triangle());
    REQUIRE(pos.balanced());
    CHECK(pos.switching->empty());

    BalanceResult neg = is_balanced(make_all_negative_clique(3));
    REQUIRE_FALSE(neg.balanced());
    CHECK(neg.cycle->length() == 3);
    validate_negative_cycle(make_all_negative_clique(3), *neg.cycle);

    BalanceResult dig = is_balanced(make_digon());
    REQUIRE_FALSE(dig.balanced());
    CHECK(dig.cycle->length() == 2);

    // balanced witness makes every edge positive
    SignedGraph mixed(4, {{0, 1, Sign::minus}, {1, 2, Sign::minus}, {2, 3, Sign::plus},
                          {0, 3, Sign::plus}});
    BalanceResult r = is_balanced(mixed);
    REQUIRE(r.balanced());
    CHECK(is_all_positive(switched(mixed, *r.switching)));
}

TEST_CASE("double cover structure") {
    DoubleCover pos = double_cover(positive_triangle());
    // balanced: two disjoint triangles, fibers never merge
    auto dist = bfs_distances(pos.graph, 0);
    CHECK(dist[pos.neg(0)] == -1);
    CHECK(pos.graph.edges().size() == 6);

    DoubleCover single = double_cover(SignedGraph(2, {{0, 1, Sign::minus}}));
    CHECK(single.graph.edges().size() == 2);
    CHECK(single.graph.has_edge(0, 3));  // (0,+)(1,-)
    CHECK(single.graph.has_edge(1, 2));  // (1,+)(0,-)

    DoubleCover dig = double_cover(make_digon());
    // the four cover edges of a digon form a 4-cycle
    CHECK(dig.graph.edges().size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(dig.graph.neighbors(v).size() == 2);
    CHECK(bfs_distances(dig.graph, 0)[dig.neg(0)] == 2);
}

TEST_CASE("negative girth basics") {
    CHECK(negative_girth(make_digon()).length() == 2);
    CHECK(negative_girth(make_all_negative_clique(5)).length() == 3);
    CHECK_FALSE(negative_girth(positive_triangle()).finite());
    CHECK(negative_girth(make_negative_cycle(25)).length() == 25);
    CHECK_THROWS_AS(negative_girth(positive_triangle()).length(), std::logic_error);

    NegativeGirth g = negative_girth(make_all_negative_clique(5));
    validate_negative_cycle(make_all_negative_clique(5), *g.cycle);
    CHECK(g.cycle->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("negative girth is deterministic across thread counts") {
    Rng rng(99);
    for (int t = 0; t < 25; ++t) {
        SignedGraph g = random_signed_graph(rng, 2 + rng.below(10), 0.4);
        NegativeGirth a = negative_girth(g, 1);
        NegativeGirth b = negative_girth(g, 4);
        REQUIRE(a.finite() == b.finite());
        if (a.finite()) {
            CHECK(a.cycle->vertices == b.cycle->vertices);
            CHECK(a.cycle->signs == b.cycle->signs);
        }
    }
}

TEST_CASE("closed walk reduction excises positive detours") {
    // walk 0-1-2-1-3-0 with a positive out-and-back detour 1-2-1
    std::vector<int> verts = {0, 1, 2, 1, 3};
    std::vector<Sign> signs = {Sign::plus, Sign::plus, Sign::plus, Sign::plus, Sign::minus};
    NegativeCycle c = reduce_closed_walk(verts, signs);
    CHECK(c.length() == 3);
    CHECK(c.vertices == std::vector<int>{0, 1, 3});

    // negative inner segment: the reduction recurses into it
    std::vector<int> verts2 = {0, 1, 2, 1};
    std::vector<Sign> signs2 = {Sign::plus, Sign::plus, Sign::minus, Sign::plus};
    NegativeCycle c2 = reduce_closed_walk(verts2, signs2);
    CHECK(c2.length() == 2);
    CHECK(c2.vertices == std::vector<int>{1, 2});

    CHECK_THROWS(reduce_closed_walk({0, 1}, {Sign::plus, Sign::plus}));
}

TEST_CASE("distances, balls and radii use ambient hops") {
    SignedGraph c25 = make_negative_cycle(25);
    CHECK(distance(c25, 3, 3) == 0);
    std::vector<int> all(25);
    for (int v = 0; v < 25; ++v) all[v] = v;
    CHECK(radius_in(c25, all) == 12);

    SignedGraph path(3, {{0, 1, Sign::plus}, {1, 2, Sign::minus}});
    CHECK(ball(path, 1, 1) == std::vector<int>{0, 1, 2});
    CHECK(ball(path, 0, 0) == std::vector<int>{0});

    SignedGraph split(4, {{0, 1, Sign::plus}, {2, 3, Sign::minus}});
    CHECK_FALSE(distance(split, 0, 3).has_value());
    CHECK_FALSE(radius_in(split, {0, 1, 2}).has_value());
    CHECK_THROWS_AS(radius_in(split, {}), std::invalid_argument);
}

TEST_CASE("induced subgraphs, negative subgraph, all-negative lift") {
    SignedGraph dig = make_digon();
    std::vector<int> ids;
    SignedGraph one = induced(dig, {0}, &ids);
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);

    SignedGraph both = induced(dig, {1, 0});
    CHECK(both.pair_state(0, 1) == PairState::digon);  // digons survive induction

    PlainGraph neg = negative_subgraph(make_all_negative_clique(5));
    CHECK(neg.edges().size() == 10);

    SignedGraph lifted = to_all_negative(complete_graph(3));
    CHECK(lifted == make_all_negative_clique(3));
}

TEST_CASE("Harary equivalence and switching invariance") {
    Rng rng(4242);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + rng.below(10);
        SignedGraph g = random_signed_graph(rng, n, 0.35);
        BalanceResult b = is_balanced(g);
        NegativeGirth gg = negative_girth(g);
        CHECK(b.balanced() == !gg.finite());

        std::vector<int> flip_set = random_subset(rng, n);
        SignedGraph s = switched(g, flip_set);
        std::vector<char> in_flip(n, 0);
        for (int v : flip_set) in_flip[v] = 1;
        CHECK(is_balanced(s).balanced() == b.balanced());
        NegativeGirth gs = negative_girth(s);
        REQUIRE(gs.finite() == gg.finite());
        if (gg.finite()) CHECK(gs.length() == gg.length());

        // closed walk signs are switching invariant: follow the witness cycle
        // through the switch (each cut edge flips, so the product is unchanged)
        if (gg.finite()) {
            std::vector<WalkStep> walk;
            for (int i = 0; i < gg.cycle->length(); ++i) {
                int u = gg.cycle->vertices[i];
                int v = gg.cycle->vertices[(i + 1) % gg.cycle->length()];
                Sign orig = gg.cycle->signs[i];
                walk.push_back({u, v, in_flip[u] != in_flip[v] ? flipped(orig) : orig});
            }
            CHECK(closed_walk_sign(s, walk) == Sign::minus);
        }
    }
}

TEST_CASE("balance and girth match the oracles exhaustively (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        const std::uint64_t total = 1ULL << (2 * pairs);
        for (std::uint64_t code = 0; code < total; ++code) {
            SignedGraph g = from_pair_code(n, code);
            BalanceResult fast = is_balanced(g);
            REQUIRE(fast.balanced() == oracle_balanced(g));
            NegativeGirth girth = negative_girth(g);
            auto brute = oracle_negative_girth(g);
            REQUIRE(girth.finite() == brute.has_value());
            if (girth.finite()) {
                REQUIRE(girth.length() == *brute);
                validate_negative_cycle(g, *girth.cycle);
            } else {
                CHECK(is_all_positive(switched(g, *fast.switching)));
            }
        }
    }
}

TEST_CASE("double cover components never merge fibers iff balanced") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        SignedGraph g = random_signed_graph(rng, 1 + rng.below(9), 0.4);
        DoubleCover cover = double_cover(g);
        bool merged = false;
        for (int v = 0; v < g.vertex_count() && !merged; ++v)
            merged = bfs_distances(cover.graph, cover.pos(v))[cover.neg(v)] >= 0;
        CHECK(merged == !is_balanced(g).balanced());
    }
}
