#include <doctest.h>

#include <random>

#include "p6bull/listcolor.hpp"
#include "p6bull/patterns.hpp"
#include "support/oracles.hpp"

using namespace p6bull;

namespace {

ListAssignment lists_of(std::initializer_list<std::initializer_list<int>> lls) {
    ListAssignment out;
    for (auto ll : lls) {
        ColorMask m = 0;
        for (int c : ll) m = ColorMask(m | color_bit(c));
        out.push_back(m);
    }
    return out;
}

void check_respects(const Graph& g, const ListAssignment& lists, const Coloring& c) {
    CHECK(verify_coloring(g, c));
    for (int v = 0; v < g.order(); ++v) CHECK((lists[v] & color_bit(c.color[v])) != 0);
}

}  // namespace

TEST_CASE("two_list_color basics") {
    Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(!two_list_color(tri, lists_of({{1, 2}, {1, 2}, {1, 2}})).has_value());

    Graph edge(2, {{0, 1}});
    auto c = two_list_color(edge, lists_of({{1}, {1, 2}}));
    REQUIRE(c.has_value());
    CHECK(c->color[0] == 1);
    CHECK(c->color[1] == 2);

    // C5 with one singleton list; expected value confirmed by enumeration
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto lists = lists_of({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {3}});
    CHECK(oracles::list_colorable(c5, lists));
    auto r = two_list_color(c5, lists);
    REQUIRE(r.has_value());
    check_respects(c5, lists, *r);

    // empty list is infeasible, not an error; a wide list is a contract error
    CHECK(!two_list_color(edge, {ColorMask(0), kFourColors & ColorMask(3)}).has_value());
    CHECK_THROWS_AS(two_list_color(edge, {ColorMask(7), ColorMask(3)}), std::invalid_argument);
}

TEST_CASE("two_list_color matches exhaustive enumeration and the exact solver") {
    std::mt19937_64 rng(7301);
    int feasible = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        int n = 1 + int(rng() % 12);
        Graph g = oracles::random_graph(n, 0.2 + 0.1 * double(rng() % 5), rng);
        ListAssignment lists(n);
        for (int v = 0; v < n; ++v) {
            int a = 1 + int(rng() % 4), b = 1 + int(rng() % 4);
            lists[v] = ColorMask(color_bit(a) | color_bit(b));  // size one when a == b
        }
        bool expect = oracles::list_colorable(g, lists);
        auto fast = two_list_color(g, lists);
        auto slow = exact_list_color(g, lists);
        CHECK(fast.has_value() == expect);
        CHECK(slow.has_value() == expect);
        if (fast) {
            ++feasible;
            check_respects(g, lists, *fast);
            check_respects(g, lists, *slow);
        }
    }
    CHECK(feasible > 100);  // the campaign exercises both answers
}

TEST_CASE("exact_list_color on general lists") {
    Graph k5 = pattern(PatternKind::K5).as_graph();
    CHECK(!exact_list_color(k5, ListAssignment(5, kFourColors)).has_value());

    Graph empty(0, {});
    auto c = exact_list_color(empty, {});
    REQUIRE(c.has_value());
    CHECK(c->color.empty());

    std::mt19937_64 rng(7302);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + int(rng() % 9);
        Graph g = oracles::random_graph(n, 0.4, rng);
        ListAssignment lists(n);
        for (int v = 0; v < n; ++v) lists[v] = ColorMask(1 + int(rng() % 15));
        bool expect = oracles::list_colorable(g, lists);
        auto got = exact_list_color(g, lists);
        CHECK(got.has_value() == expect);
        if (got) check_respects(g, lists, *got);
    }
}

TEST_CASE("exact_k_color basics") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(!exact_k_color(c5, 2).has_value());
    auto c = exact_k_color(c5, 3);
    REQUIRE(c.has_value());
    CHECK(verify_coloring(c5, *c));

    CHECK(!exact_k_color(pattern(PatternKind::K5).as_graph(), 4).has_value());
    CHECK(!exact_k_color(pattern(PatternKind::DoubleWheel).as_graph(), 4).has_value());
    CHECK(exact_k_color(pattern(PatternKind::DoubleWheel).as_graph(), 5).has_value());

    CHECK(exact_k_color(Graph(0, {}), 1).has_value());
    CHECK_THROWS_AS(exact_k_color(c5, 0), std::invalid_argument);
}

TEST_CASE("exact_k_color agrees with enumeration and is monotone in k") {
    std::mt19937_64 rng(7303);
    for (int trial = 0; trial < 250; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g = oracles::random_graph(n, 0.3 + 0.2 * double(rng() % 3), rng);
        bool prev = false;
        for (int k = 1; k <= 5; ++k) {
            bool expect = oracles::k_colorable(g, k);
            auto got = exact_k_color(g, k);
            CHECK(got.has_value() == expect);
            if (got) CHECK(verify_coloring(g, *got));
            CHECK((!prev || got.has_value()));  // feasible at k stays feasible at k+1
            prev = got.has_value();
        }
    }
}

TEST_CASE("chromatic_small fast paths and cap") {
    CHECK(chromatic_small(Graph(3, {})).chi == 1);
    CHECK(chromatic_small(Graph(0, {})).chi == 0);
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(chromatic_small(c5).chi == 3);
    CHECK(chromatic_small(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).chi == 2);
    CHECK(chromatic_small(pattern(PatternKind::K5).as_graph()).chi == 5);
    CHECK(!chromatic_small(pattern(PatternKind::K5).as_graph()).coloring.has_value());

    std::mt19937_64 rng(7304);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g = oracles::random_graph(n, 0.5, rng);
        SmallChromatic sc = chromatic_small(g);
        if (sc.chi <= 4) {
            REQUIRE(sc.coloring.has_value());
            CHECK(verify_coloring(g, *sc.coloring));
            CHECK(!oracles::k_colorable(g, sc.chi - 1));
        } else {
            CHECK(!oracles::k_colorable(g, 4));
        }
    }
}

TEST_CASE("magnet_color basics") {
    Graph k5 = pattern(PatternKind::K5).as_graph();
    CHECK(!magnet_color(k5, VertexSet::of(5, {0, 1, 2})).has_value());

    // double wheel precolored on both hubs plus one rim edge: still infeasible
    Graph dw = pattern(PatternKind::DoubleWheel).as_graph();
    VertexSet hubs_plus_edge = VertexSet::of(7, {0, 1, 5, 6});
    REQUIRE(is_magnet(dw, hubs_plus_edge));
    CHECK(!magnet_color(dw, hubs_plus_edge).has_value());

    // precondition violations throw
    Graph path(2, {{0, 1}});
    CHECK_THROWS_AS(magnet_color(path, VertexSet::of(2, {0})), std::invalid_argument);
}

TEST_CASE("magnet_color agrees with the oracle on F0-anchored instances") {
    const Pattern& f0 = pattern(PatternKind::F0);
    std::mt19937_64 rng(7305);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 120; ++trial) {
        // F0 plus a few vertices, each wired to at least one F0 edge
        int extra = 1 + int(rng() % 3);
        int n = 7 + extra;
        auto edges = f0.edges;
        for (int t = 0; t < extra; ++t) {
            int v = 7 + t;
            auto [a, b] = f0.edges[rng() % f0.edges.size()];
            edges.emplace_back(v, a);
            edges.emplace_back(v, b);
            for (int u = 0; u < v; ++u)
                if ((rng() % 4) == 0) edges.emplace_back(v, u);
        }
        Graph g(n, edges);
        VertexSet fset = VertexSet::of(n, {0, 1, 2, 3, 4, 5, 6});
        if (!is_magnet(g, fset)) continue;
        long trials = 0;
        auto got = magnet_color(g, fset, &trials);
        CHECK(trials >= 1);
        bool expect = oracles::k_colorable(g, 4);
        CHECK(got.has_value() == expect);
        if (got) {
            CHECK(verify_coloring(g, *got));
            ++feasible;
        } else {
            ++infeasible;
        }
    }
    CHECK(feasible > 0);
}
