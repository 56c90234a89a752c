#include <random>

#include "doctest.h"
#include "equistable/oracle.hpp"
#include "test_helpers.hpp"

using namespace equistable;
using namespace equistable::oracle;
namespace tg = equistable::testing;

TEST_CASE("enumerate_maximal_stable_sets on the named small graphs") {
    auto p4 = enumerate_maximal_stable_sets(tg::path_graph(4));
    CHECK(p4 == std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 3}});

    auto c4 = enumerate_maximal_stable_sets(tg::cycle_graph(4));
    CHECK(c4 == std::vector<VertexSet>{{0, 2}, {1, 3}});

    auto k3 = enumerate_maximal_stable_sets(tg::complete_graph(3));
    CHECK(k3 == std::vector<VertexSet>{{0}, {1}, {2}});
}

TEST_CASE("enumeration equals filtering all subsets, lexicographically sorted") {
    std::mt19937_64 seeds(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(seeds() % 13);
        Graph g = tg::random_graph(n, 0.35, seeds());
        auto fast = enumerate_maximal_stable_sets(g);
        auto slow = tg::mss_by_filtering(g);
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
        for (const VertexSet& s : fast) CHECK(is_maximal_stable(g, s));
    }
}

TEST_CASE("verify_structure_exhaustive on the named examples") {
    CHECK(verify_structure_exhaustive(tg::complete_graph(3), {{1, 1, 1}, 1}));
    CHECK(verify_structure_exhaustive(tg::cycle_graph(4), {{1, 2, 3, 2}, 4}));
    CHECK_FALSE(verify_structure_exhaustive(tg::cycle_graph(4), {{1, 1, 1, 1}, 2}));
    CHECK(verify_structure_exhaustive(tg::edgeless_graph(5), {{1, 1, 1, 1, 1}, 5}));
}

TEST_CASE("verify rejects malformed structures") {
    Graph c4 = tg::cycle_graph(4);
    CHECK_THROWS_AS(verify_structure_exhaustive(c4, {{1, 2, 3}, 4}), std::invalid_argument);
    CHECK_THROWS_AS(verify_structure_exhaustive(c4, {{1, 0, 1, 1}, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verify_structure_quotient(c4, {{1, 2, 3, 2}, 0}), std::invalid_argument);
}

TEST_CASE("verify_structure_quotient short-circuits impossible weight layouts") {
    // weight 1 spans both twin classes of C4
    CHECK_FALSE(verify_structure_quotient(tg::cycle_graph(4), {{1, 1, 2, 3}, 4}));
    // clique class carrying two weights
    CHECK_FALSE(verify_structure_quotient(tg::complete_graph(3), {{1, 2, 1}, 1}));
    CHECK(verify_structure_quotient(tg::cycle_graph(4), {{1, 2, 3, 2}, 4}));
}

TEST_CASE("quotient and exhaustive verification agree") {
    std::mt19937_64 seeds(59);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = (trial % 2 == 0) ? tg::random_blowup(seeds(), 3, 4)
                                   : tg::random_graph(1 + static_cast<int>(seeds() % 10), 0.4, seeds());
        if (g.vertex_count() > 12) continue;
        EquistableStructure s;
        s.weights.resize(g.vertex_count());
        for (int& w : s.weights) w = 1 + static_cast<int>(seeds() % 3);
        VertexSet mss = greedy_maximal_stable_set(g);
        s.target = 0;
        for (Vertex v : mss) s.target += s.weights[v];
        CHECK(verify_structure_quotient(g, s) == verify_structure_exhaustive(g, s));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("min_k_exhaustive on the named small graphs") {
    auto k3 = min_k_exhaustive(tg::complete_graph(3), 3);
    REQUIRE(k3.has_value());
    CHECK(k3->first == 1);
    CHECK(k3->second.weights == std::vector<int>{1, 1, 1});
    CHECK(k3->second.target == 1);

    auto c4 = min_k_exhaustive(tg::cycle_graph(4), 4);
    REQUIRE(c4.has_value());
    CHECK(c4->first == 3);
    CHECK(c4->second.target == 4);
    CHECK(verify_structure_exhaustive(tg::cycle_graph(4), c4->second));

    CHECK_FALSE(min_k_exhaustive(tg::path_graph(4), 6).has_value());
}

TEST_CASE("min_k_exhaustive is monotone in k_max and its witness verifies") {
    std::mt19937_64 seeds(61);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = tg::random_blowup(seeds(), 3, 3);
        if (g.vertex_count() > 12) continue;
        auto found = min_k_exhaustive(g, 3);
        if (!found) continue;
        CHECK(verify_structure_exhaustive(g, found->second));
        for (int cap = found->first; cap <= 4; ++cap) {
            auto again = min_k_exhaustive(g, cap);
            REQUIRE(again.has_value());
            CHECK(again->first == found->first);
        }
    }
}

TEST_CASE("min_k_naive agrees with the candidate-based search") {
    std::mt19937_64 seeds(67);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(seeds() % 6);
        Graph g = tg::random_graph(n, 0.5, seeds());
        auto naive = min_k_naive(g, 3);
        auto fast = min_k_exhaustive(g, 3);
        REQUIRE(naive.has_value() == fast.has_value());
        if (naive) CHECK(naive->first == fast->first);
    }
}

TEST_CASE("caps are enforced unless forced") {
    Graph big = tg::random_graph(26, 0.2, 5);
    CHECK_THROWS_AS(enumerate_maximal_stable_sets(big), CapExceeded);
    CHECK_NOTHROW(enumerate_maximal_stable_sets(big, {}, true));

    OracleLimits tight;
    tight.max_n_candidates = 4;
    CHECK_THROWS_AS(min_k_exhaustive(tg::path_graph(5), 2, tight), CapExceeded);
    CHECK_NOTHROW(min_k_exhaustive(tg::path_graph(5), 2, tight, true));

    CHECK_THROWS_AS(min_k_naive(tg::random_graph(9, 0.3, 6), 2), CapExceeded);
}
