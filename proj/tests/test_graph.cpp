#include <doctest.h>

#include <random>

#include "p6bull/graph.hpp"
#include "support/oracles.hpp"

using namespace p6bull;

namespace {
Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Graph bull_graph() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}); }
Graph k5() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}
}  // namespace

TEST_CASE("graph construction and validation") {
    Graph g = c5();
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));

    Graph empty(0, {});
    CHECK(empty.order() == 0);
    CHECK(empty.edge_count() == 0);

    Graph bull = bull_graph();
    CHECK(bull.edge_count() == 5);
    CHECK(bull.degree(1) == 3);
    CHECK(bull.degree(0) == 1);

    // duplicates collapse
    Graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("complete and anticomplete checks") {
    Graph bull = bull_graph();
    // the hub vertex 1 sees 0, 2 and 4
    CHECK(is_complete_to(bull, 1, VertexSet::of(5, {0, 2, 4})));
    CHECK(is_anticomplete_to(bull, 0, VertexSet::of(5, {3, 4})));

    // empty set: vacuously both
    CHECK(is_complete_to(bull, 0, VertexSet(5)));
    CHECK(is_anticomplete_to(bull, 0, VertexSet(5)));

    Graph cyc = c5();
    CHECK(is_anticomplete_to(cyc, 0, VertexSet::of(5, {2, 3})));

    CHECK_THROWS_AS(is_complete_to(bull, 1, VertexSet::of(5, {1, 2})), std::invalid_argument);
}

TEST_CASE("components partition the vertex set") {
    CHECK(components(c5()).size() == 1);
    CHECK(components(c5())[0].count() == 5);

    Graph two_edges(4, {{0, 1}, {2, 3}});
    auto comps = components(two_edges);
    CHECK(comps.size() == 2);
    CHECK(comps[0].count() == 2);
    CHECK(comps[1].count() == 2);
    CHECK(sets_anticomplete(two_edges, comps[0], comps[1]));

    CHECK(components(Graph(0, {})).empty());
}

TEST_CASE("components are connected and pairwise anticomplete on random graphs") {
    std::mt19937_64 rng(7101);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 9);
        Graph g = oracles::random_graph(n, 0.3, rng);
        auto comps = components(g);
        VertexSet all(n);
        for (const auto& comp : comps) {
            CHECK(!comp.intersects(all));
            all |= comp;
            CHECK(components_in(g, comp).size() == 1);
        }
        CHECK(all == g.vertices());
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j)
                CHECK(sets_anticomplete(g, comps[i], comps[j]));
    }
}

TEST_CASE("complement is an involution; C5 is self-complementary") {
    std::mt19937_64 rng(7102);
    for (int trial = 0; trial < 100; ++trial) {
        int n = int(rng() % 10);
        Graph g = oracles::random_graph(n, 0.5, rng);
        Graph cc = complement(complement(g));
        CHECK(cc.order() == g.order());
        CHECK(cc.edges() == g.edges());
    }
    CHECK(oracles::isomorphic(c5(), complement(c5())));
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
    std::mt19937_64 rng(7103);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng() % 8);
        Graph g = oracles::random_graph(n, 0.5, rng);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s.add(v);
        auto sub = induced(g, s);
        CHECK(sub.graph.order() == s.count());
        for (int i = 0; i < sub.graph.order(); ++i)
            for (int j = i + 1; j < sub.graph.order(); ++j)
                CHECK(sub.graph.adjacent(i, j) == g.adjacent(sub.to_parent[i], sub.to_parent[j]));
    }
}

TEST_CASE("cliques, stable sets, bipartitions") {
    Graph k = k5();
    CHECK(is_clique(k, k.vertices()));
    CHECK(!is_stable(k, VertexSet::of(5, {0, 1})));
    CHECK(is_stable(c5(), VertexSet::of(5, {0, 2})));

    CHECK(!bipartition_of_component(c5(), c5().vertices()).has_value());

    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto bip = bipartition_of_component(p4, p4.vertices());
    REQUIRE(bip.has_value());
    CHECK(bip->first == VertexSet::of(4, {0, 2}));
    CHECK(bip->second == VertexSet::of(4, {1, 3}));
}

TEST_CASE("verify_coloring accepts exactly the proper total maps") {
    Graph cyc = c5();
    CHECK(verify_coloring(cyc, Coloring{4, {1, 2, 1, 2, 3}}));
    CHECK(!verify_coloring(cyc, Coloring{4, {1, 1, 2, 1, 2}}));

    Graph edge(2, {{0, 1}});
    CHECK(!verify_coloring(edge, Coloring{4, {1, 1}}));

    CHECK(verify_coloring(k5(), Coloring{5, {1, 2, 3, 4, 5}}));
    CHECK(!verify_coloring(k5(), Coloring{4, {1, 2, 3, 4, 5}}));  // color outside the palette

    CHECK_THROWS_AS(verify_coloring(cyc, Coloring{4, {1, 2}}), std::invalid_argument);
}

TEST_CASE("verify_coloring agrees with an edge scan on random colorings") {
    std::mt19937_64 rng(7104);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g = oracles::random_graph(n, 0.5, rng);
        Coloring c{4, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) c.color[v] = 1 + int(rng() % 4);
        bool expect = true;
        for (auto [u, v] : g.edges())
            if (c.color[u] == c.color[v]) expect = false;
        CHECK(verify_coloring(g, c) == expect);
    }
}
