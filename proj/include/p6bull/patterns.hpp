#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "p6bull/graph.hpp"

namespace p6bull {

enum class PatternKind { P6, C5, K3, K5, Bull, Gem, Broom, DoubleWheel, F0, F1, F2, F3, F4, F5, F6 };

// A fixed small graph searched for as an induced subgraph.  Order never exceeds 7.
struct Pattern {
    PatternKind kind;
    std::string_view name;
    int order = 0;
    std::vector<std::pair<int, int>> edges;
    std::array<std::uint8_t, 8> adj{};  // adjacency bitmasks over pattern vertices

    bool adjacent(int i, int j) const { return (adj[i] >> j) & 1; }

    Graph as_graph() const { return Graph(order, std::span<const std::pair<int, int>>(edges)); }
};

namespace detail {

inline Pattern make_pattern(PatternKind kind, std::string_view name, int order,
                            std::vector<std::pair<int, int>> edges) {
    Pattern p{kind, name, order, std::move(edges), {}};
    for (auto [a, b] : p.edges) {
        p.adj[a] |= std::uint8_t(1u << b);
        p.adj[b] |= std::uint8_t(1u << a);
    }
    return p;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return e;
}

inline std::vector<std::pair<int, int>> complement_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n, std::span<const std::pair<int, int>>(edges));
    return complement(g).edges();
}

inline std::vector<Pattern> build_catalogue() {
    using PK = PatternKind;
    std::vector<Pattern> cat;

    cat.push_back(make_pattern(PK::P6, "P6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    cat.push_back(make_pattern(PK::C5, "C5", 5, cycle_edges(5)));
    cat.push_back(make_pattern(PK::K3, "K3", 3, {{0, 1}, {0, 2}, {1, 2}}));
    {
        std::vector<std::pair<int, int>> k5;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
        cat.push_back(make_pattern(PK::K5, "K5", 5, std::move(k5)));
    }
    // bull: triangle 1-2-4 with pendants 0 at 1 and 3 at 2
    cat.push_back(make_pattern(PK::Bull, "bull", 5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}));
    // gem: path 0-1-2-3 dominated by 4
    cat.push_back(make_pattern(PK::Gem, "gem", 5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}));
    // broom: gem plus a pendant 5 on the dominating vertex 4
    cat.push_back(make_pattern(PK::Broom, "broom", 6,
                               {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {4, 5}}));
    {
        // double wheel: C5 plus two adjacent vertices complete to the cycle
        std::vector<std::pair<int, int>> dw = cycle_edges(5);
        for (int i = 0; i < 5; ++i) {
            dw.emplace_back(5, i);
            dw.emplace_back(6, i);
        }
        dw.emplace_back(5, 6);
        cat.push_back(make_pattern(PK::DoubleWheel, "double-wheel", 7, std::move(dw)));
    }
    {
        // F0: C5 0..4, vertex 5 complete to the cycle, vertex 6 adjacent to 0..3
        std::vector<std::pair<int, int>> f0 = cycle_edges(5);
        for (int i = 0; i < 5; ++i) f0.emplace_back(5, i);
        for (int i = 0; i < 4; ++i) f0.emplace_back(6, i);
        cat.push_back(make_pattern(PK::F0, "F0", 7, std::move(f0)));
    }
    {
        // F1: path 0-1-2-3-4 dominated by 5
        std::vector<std::pair<int, int>> f1 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
        for (int i = 0; i < 5; ++i) f1.emplace_back(5, i);
        cat.push_back(make_pattern(PK::F1, "F1", 6, f1));
        // F2: F1 plus the closing edge 0-4
        f1.emplace_back(0, 4);
        cat.push_back(make_pattern(PK::F2, "F2", 6, std::move(f1)));
    }
    {
        std::vector<std::pair<int, int>> f3 = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                               {2, 4}, {3, 4}, {3, 5}, {4, 5}};
        cat.push_back(make_pattern(PK::F3, "F3", 6, f3));
        // F4: F3 plus the edge 0-5
        f3.emplace_back(0, 5);
        cat.push_back(make_pattern(PK::F4, "F4", 6, std::move(f3)));
    }
    // F5: complement of C6, materialized by complementation
    cat.push_back(make_pattern(PK::F5, "F5", 6, complement_edges(6, cycle_edges(6))));
    {
        // F6: C5 0..4, vertex 5 adjacent to 0,1,2,4, vertex 6 adjacent to 1,2,3,4,5
        std::vector<std::pair<int, int>> f6 = cycle_edges(5);
        for (int i : {0, 1, 2, 4}) f6.emplace_back(5, i);
        for (int i : {1, 2, 3, 4, 5}) f6.emplace_back(6, i);
        cat.push_back(make_pattern(PK::F6, "F6", 7, std::move(f6)));
    }
    return cat;
}

}  // namespace detail

inline const std::vector<Pattern>& catalogue() {
    static const std::vector<Pattern> cat = detail::build_catalogue();
    return cat;
}

inline const Pattern& pattern(PatternKind kind) {
    for (const Pattern& p : catalogue())
        if (p.kind == kind) return p;
    throw std::logic_error("pattern: unknown kind");
}

// Injective map pattern vertex -> host vertex whose image induces the pattern exactly.
struct Embedding {
    PatternKind kind;
    std::vector<int> map;
};

// Lexicographically first induced embedding of p in g (ordered by the map tuple), if any.
inline std::optional<Embedding> find_induced(const Graph& g, const Pattern& p) {
    const int k = p.order;
    const int n = g.order();
    if (k > n) return std::nullopt;
    if (k == 0) return Embedding{p.kind, {}};

    std::array<int, 8> pdeg{};
    for (auto [a, b] : p.edges) {
        ++pdeg[a];
        ++pdeg[b];
    }

    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int d) -> bool {
        if (d == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) < pdeg[d]) continue;
            bool ok = true;
            for (int j = 0; j < d; ++j) {
                if (g.adjacent(map[j], v) != p.adjacent(j, d)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[d] = v;
            used[v] = 1;
            if (self(self, d + 1)) return true;
            used[v] = 0;
            map[d] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0)) return Embedding{p.kind, map};
    return std::nullopt;
}

// Witness that g lies outside the (P6, bull)-free class, or nothing when it is inside.
// The bull is searched first since its detection is one order cheaper.
inline std::optional<Embedding> class_witness(const Graph& g) {
    if (auto b = find_induced(g, pattern(PatternKind::Bull))) return b;
    if (auto p = find_induced(g, pattern(PatternKind::P6))) return p;
    return std::nullopt;
}

inline bool in_class(const Graph& g) { return !class_witness(g).has_value(); }

namespace detail {

struct Dsu {
    std::vector<int> up;
    explicit Dsu(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void join(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace detail

// Connected, and any two edges linked by a chain of consecutive edge pairs
// that share a vertex and induce a P3 (i.e. the two free ends are non-adjacent).
inline bool is_p3_connected(const Graph& g) {
    if (g.order() == 0) return true;
    if (!is_connected(g)) return false;
    auto edges = g.edges();
    if (edges.size() <= 1) return true;

    detail::Dsu dsu((int)edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            int shared = -1, x = -1, y = -1;
            if (a == c) shared = a, x = b, y = d;
            else if (a == d) shared = a, x = b, y = c;
            else if (b == c) shared = b, x = a, y = d;
            else if (b == d) shared = b, x = a, y = c;
            if (shared >= 0 && !g.adjacent(x, y)) dsu.join((int)i, (int)j);
        }
    }
    int root = dsu.find(0);
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (dsu.find((int)i) != root) return false;
    return true;
}

// Every vertex outside f has two adjacent neighbors inside f.
inline bool is_magnet(const Graph& g, const VertexSet& f) {
    for (int v = 0; v < g.order(); ++v) {
        if (f.contains(v)) continue;
        VertexSet nf = g.neighbors(v) & f;
        bool anchored = false;
        for (int u : nf) {
            if (g.neighbors(u).intersects(nf)) {
                anchored = true;
                break;
            }
        }
        if (!anchored) return false;
    }
    return true;
}

}  // namespace p6bull
