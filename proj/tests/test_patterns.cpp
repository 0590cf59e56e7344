#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "p6bull/patterns.hpp"
#include "support/oracles.hpp"

using namespace p6bull;

TEST_CASE("catalogue edge lists match their definitions") {
    auto edge_set = [](const Pattern& p) {
        std::set<std::pair<int, int>> s;
        for (auto [a, b] : p.edges) s.insert({std::min(a, b), std::max(a, b)});
        return s;
    };

    const Pattern& bull = pattern(PatternKind::Bull);
    CHECK(bull.order == 5);
    CHECK(edge_set(bull) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});

    const Pattern& gem = pattern(PatternKind::Gem);
    CHECK(gem.order == 5);
    CHECK(edge_set(gem) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});

    const Pattern& broom = pattern(PatternKind::Broom);
    CHECK(broom.order == 6);
    CHECK(edge_set(broom) == std::set<std::pair<int, int>>{
                                 {0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});

    const Pattern& f0 = pattern(PatternKind::F0);
    CHECK(f0.order == 7);
    CHECK(f0.edges.size() == 14);
    const Pattern& f6 = pattern(PatternKind::F6);
    CHECK(f6.order == 7);
    CHECK(f6.edges.size() == 14);

    // F5 comes from complementing a C6: 3-regular on six vertices
    const Pattern& f5 = pattern(PatternKind::F5);
    CHECK(f5.order == 6);
    CHECK(f5.edges.size() == 9);
    Graph f5g = f5.as_graph();
    for (int v = 0; v < 6; ++v) CHECK(f5g.degree(v) == 3);
    CHECK(oracles::isomorphic(complement(f5g), Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})));

    const Pattern& dw = pattern(PatternKind::DoubleWheel);
    CHECK(dw.order == 7);
    CHECK(dw.edges.size() == 16);
    CHECK(dw.adjacent(5, 6));
}

TEST_CASE("every pattern embeds in itself by the identity") {
    for (const Pattern& p : catalogue()) {
        auto emb = find_induced(p.as_graph(), p);
        REQUIRE(emb.has_value());
        for (int i = 0; i < p.order; ++i) CHECK(emb->map[i] == i);
    }
}

TEST_CASE("embeddings induce the pattern exactly") {
    std::mt19937_64 rng(7201);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + int(rng() % 5);
        Graph g = oracles::random_graph(n, 0.4 + 0.2 * double(rng() % 3), rng);
        for (const Pattern& p : catalogue()) {
            auto emb = find_induced(g, p);
            if (!emb) continue;
            std::set<int> distinct(emb->map.begin(), emb->map.end());
            CHECK((int)distinct.size() == p.order);
            for (int i = 0; i < p.order; ++i)
                for (int j = i + 1; j < p.order; ++j)
                    CHECK(g.adjacent(emb->map[i], emb->map[j]) == p.adjacent(i, j));
        }
    }
}

TEST_CASE("find_induced agrees with subset enumeration") {
    std::mt19937_64 rng(7202);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + int(rng() % 4);
        Graph g = oracles::random_graph(n, 0.35 + 0.15 * double(rng() % 3), rng);
        for (const Pattern& p : catalogue()) {
            if (p.order > n) continue;
            CHECK(find_induced(g, p).has_value() == oracles::contains_induced(g, p));
        }
    }

    // exhaustive over every labeled host on five vertices
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g = oracles::from_mask(5, mask);
        for (const Pattern& p : catalogue()) {
            if (p.order > 5) continue;
            CHECK(find_induced(g, p).has_value() == oracles::contains_induced(g, p));
        }
    }
}

TEST_CASE("C5 holds no bull; deleting a cycle vertex of F2 leaves a gem") {
    Graph cyc = pattern(PatternKind::C5).as_graph();
    CHECK(!find_induced(cyc, pattern(PatternKind::Bull)).has_value());

    Graph f2 = pattern(PatternKind::F2).as_graph();
    CHECK(oracles::contains_induced(f2, pattern(PatternKind::Gem)));
    CHECK(find_induced(f2, pattern(PatternKind::Gem)).has_value());
}

TEST_CASE("class witness") {
    CHECK(!class_witness(pattern(PatternKind::C5).as_graph()).has_value());

    Graph path6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto w = class_witness(path6);
    REQUIRE(w.has_value());
    CHECK(w->kind == PatternKind::P6);

    auto wb = class_witness(pattern(PatternKind::Bull).as_graph());
    REQUIRE(wb.has_value());
    CHECK(wb->kind == PatternKind::Bull);

    // complete graphs stay in class
    CHECK(in_class(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
                             {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}})));
}

TEST_CASE("class witness agrees with subset enumeration on random graphs") {
    std::mt19937_64 rng(7203);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g = oracles::random_graph(n, 0.15 + 0.1 * double(rng() % 6), rng);
        bool expect = !oracles::contains_induced(g, pattern(PatternKind::Bull)) &&
                      !oracles::contains_induced(g, pattern(PatternKind::P6));
        CHECK(in_class(g) == expect);
    }
}

TEST_CASE("P3-connectivity over the catalogue") {
    std::map<PatternKind, bool> expect = {
        {PatternKind::F0, true},  {PatternKind::F1, false}, {PatternKind::F2, false},
        {PatternKind::F3, true},  {PatternKind::F4, true},  {PatternKind::F5, true},
        {PatternKind::F6, true},
    };
    for (auto [kind, value] : expect) CHECK(is_p3_connected(pattern(kind).as_graph()) == value);

    // no two edges of a triangle induce a P3
    CHECK(!is_p3_connected(pattern(PatternKind::K3).as_graph()));
    // a single edge or a lone vertex is vacuously fine; disconnected graphs are not
    CHECK(is_p3_connected(Graph(2, {{0, 1}})));
    CHECK(is_p3_connected(Graph(1, {})));
    CHECK(!is_p3_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_p3_connected(Graph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("magnet checks") {
    Graph k = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(is_magnet(k, VertexSet::of(5, {0, 1, 2})));

    Graph path(2, {{0, 1}});
    CHECK(!is_magnet(path, VertexSet::of(2, {0})));

    // the F2 pattern plus a vertex complete to it
    const Pattern& f2 = pattern(PatternKind::F2);
    auto edges = f2.edges;
    for (int i = 0; i < 6; ++i) edges.emplace_back(6, i);
    Graph g(7, edges);
    CHECK(is_magnet(g, VertexSet::of(7, {0, 1, 2, 3, 4, 5})));
    // but a pendant attached to one vertex breaks it
    edges.emplace_back(7, 0);
    Graph g2(8, edges);
    CHECK(!is_magnet(g2, VertexSet::of(8, {0, 1, 2, 3, 4, 5})));
}

TEST_CASE("find_induced is deterministic") {
    std::mt19937_64 rng(7204);
    Graph g = oracles::random_graph(9, 0.5, rng);
    for (const Pattern& p : catalogue()) {
        auto a = find_induced(g, p);
        auto b = find_induced(g, p);
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(a->map == b->map);
    }
}
