#include <random>

#include "doctest.h"
#include "equistable/twin_partition.hpp"
#include "test_helpers.hpp"

using namespace equistable;
namespace tg = equistable::testing;

TEST_CASE("twin_partition on the named small graphs") {
    TwinPartition c4 = twin_partition(tg::cycle_graph(4));
    REQUIRE(c4.pi() == 2);
    CHECK(c4.classes[0].members == VertexSet{0, 2});
    CHECK(c4.classes[0].kind == ClassKind::Stable);
    CHECK(c4.classes[1].members == VertexSet{1, 3});
    CHECK(c4.classes[1].kind == ClassKind::Stable);

    TwinPartition k4 = twin_partition(tg::complete_graph(4));
    REQUIRE(k4.pi() == 1);
    CHECK(k4.classes[0].members == VertexSet{0, 1, 2, 3});
    CHECK(k4.classes[0].kind == ClassKind::Clique);

    TwinPartition p4 = twin_partition(tg::path_graph(4));
    REQUIRE(p4.pi() == 4);
    for (const TwinClass& c : p4.classes) {
        CHECK(c.size() == 1);
        CHECK(c.kind == ClassKind::Singleton);
    }
}

TEST_CASE("quotient_graph on the named small graphs") {
    Graph c4 = tg::cycle_graph(4);
    QuotientGraph qc4 = quotient_graph(c4, twin_partition(c4));
    REQUIRE(qc4.class_count == 2);
    CHECK(qc4.adj[0] == std::vector<int>{1});
    CHECK(qc4.adj[1] == std::vector<int>{0});

    Graph k4 = tg::complete_graph(4);
    QuotientGraph qk4 = quotient_graph(k4, twin_partition(k4));
    CHECK(qk4.class_count == 1);
    CHECK(qk4.adj[0].empty());

    Graph e5 = tg::edgeless_graph(5);
    TwinPartition tpe5 = twin_partition(e5);
    REQUIRE(tpe5.pi() == 1);
    CHECK(tpe5.classes[0].kind == ClassKind::Stable);
    CHECK(quotient_graph(e5, tpe5).adj[0].empty());
}

TEST_CASE("classes agree with the pairwise twin definition") {
    std::mt19937_64 seeds(31);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(seeds() % 14);
        Graph g = (trial % 3 == 0) ? tg::random_blowup(seeds()) : tg::random_graph(n, 0.4, seeds());
        TwinPartition tp = twin_partition(g);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v)
                CHECK((tp.class_of[u] == tp.class_of[v]) == tg::twins_by_definition(g, u, v));
    }
}

TEST_CASE("every class of size >= 2 is fully a clique or fully stable") {
    std::mt19937_64 seeds(37);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = tg::random_blowup(seeds(), 4, 5);
        TwinPartition tp = twin_partition(g);
        for (const TwinClass& c : tp.classes) {
            CHECK((c.kind == ClassKind::Singleton) == (c.size() == 1));
            if (c.size() < 2) continue;
            bool want_edge = c.kind == ClassKind::Clique;
            for (size_t a = 0; a < c.members.size(); ++a)
                for (size_t b = a + 1; b < c.members.size(); ++b)
                    CHECK(g.has_edge(c.members[a], c.members[b]) == want_edge);
        }
    }
}

TEST_CASE("distinct classes see or miss each other, matching the quotient") {
    std::mt19937_64 seeds(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(seeds() % 12);
        Graph g = (trial % 2 == 0) ? tg::random_blowup(seeds()) : tg::random_graph(n, 0.5, seeds());
        TwinPartition tp = twin_partition(g);
        QuotientGraph q = quotient_graph(g, tp);
        for (int a = 0; a < tp.pi(); ++a)
            for (int b = a + 1; b < tp.pi(); ++b) {
                int cross = 0, total = 0;
                for (Vertex u : tp.classes[a].members)
                    for (Vertex v : tp.classes[b].members) {
                        ++total;
                        cross += g.has_edge(u, v) ? 1 : 0;
                    }
                CHECK((cross == 0 || cross == total));
                CHECK(q.sees(a, b) == (cross == total && total > 0 && cross > 0));
                CHECK(q.sees(a, b) == q.sees(b, a));
            }
    }
}

TEST_CASE("class ordering and class_of are consistent and deterministic") {
    std::mt19937_64 seeds(43);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = tg::random_blowup(seeds(), 4, 4);
        TwinPartition tp = twin_partition(g);
        int covered = 0;
        for (int id = 0; id < tp.pi(); ++id) {
            const TwinClass& c = tp.classes[id];
            CHECK(c.id == id);
            if (id > 0) CHECK(tp.classes[id - 1].members.front() < c.members.front());
            for (Vertex v : c.members) {
                CHECK(tp.class_of[v] == id);
                ++covered;
            }
            CHECK(std::is_sorted(c.members.begin(), c.members.end()));
        }
        CHECK(covered == g.vertex_count());
    }
}
