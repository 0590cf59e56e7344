#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "p6bull/graph.hpp"
#include "p6bull/patterns.hpp"

namespace p6bull::gen {

// mt19937_64 output is pinned by the standard, so seeded generation is
// bit-reproducible; thresholds below avoid <random> distributions because
// their streams are implementation-defined.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline bool chance(std::mt19937_64& rng, double p) {
    return double(rng() >> 11) * 0x1.0p-53 < p;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(rng, p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// One seeded draw, kept exactly when it lands inside the class.  Callers
// retry with fresh seeds.
inline std::optional<Graph> generate_in_class(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g = random_graph(n, p, rng);
    if (!in_class(g)) return std::nullopt;
    return g;
}

// Complete multipartite graphs are (P6, bull)-free: both patterns contain a
// stable pair plus a vertex seeing exactly one of it.
inline Graph random_complete_multipartite(int n, std::mt19937_64& rng) {
    int parts = 2 + (int)below(rng, 4);
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = (int)below(rng, (std::uint64_t)parts);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[u] != side[v]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Substitute small in-class graphs into vertices of a small in-class seed.
// Neither pattern has two vertices with identical outside attachment, so an
// induced copy can take at most one vertex per substituted bag; the result
// stays in class whenever every bag is.
inline Graph random_blowup(int target_n, std::mt19937_64& rng) {
    const int base_n = 4 + (int)below(rng, 3);
    Graph base = random_graph(base_n, 0.4 + 0.2 * double(below(rng, 3)), rng);
    // bag shapes: single vertex, stable pair, edge, triangle, C5
    std::vector<std::vector<std::pair<int, int>>> shapes = {
        {}, {}, {{0, 1}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
    std::vector<int> shape_order = {1, 2, 2, 3, 5};

    std::vector<int> bag(base_n, 1), bag_shape(base_n, 0);
    int total = base_n;
    for (int v = 0; v < base_n && total < target_n; ++v) {
        int s = (int)below(rng, shapes.size());
        if (total - 1 + shape_order[s] > target_n) continue;
        bag[v] = shape_order[s];
        bag_shape[v] = s;
        total += shape_order[s] - 1;
    }
    std::vector<int> start(base_n, 0);
    int acc = 0;
    for (int v = 0; v < base_n; ++v) {
        start[v] = acc;
        acc += bag[v];
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < base_n; ++v)
        for (auto [a, b] : shapes[bag_shape[v]]) edges.emplace_back(start[v] + a, start[v] + b);
    for (int u = 0; u < base_n; ++u)
        for (int v = u + 1; v < base_n; ++v) {
            if (!base.adjacent(u, v)) continue;
            for (int a = 0; a < bag[u]; ++a)
                for (int b = 0; b < bag[v]; ++b) edges.emplace_back(start[u] + a, start[v] + b);
        }
    return Graph(acc, edges);
}

namespace detail {

// Gem anchors 0..4 (path 0-1-2-3 dominated by 4) plus attachment layers wired
// the way the gem partition expects them; randomized counts and inner edges.
inline Graph try_gem_instance(std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
    int next = 5;

    auto anchors_of = [](int role) -> std::vector<int> {
        switch (role) {
            case 0: return {1, 4};        // attaches like the first path vertex
            case 1: return {0, 2, 4};
            case 2: return {1, 3, 4};
            case 3: return {2, 4};
            default: return {0, 1, 2, 3};  // attaches like the dominating vertex
        }
    };

    std::vector<int> vclones[5];
    for (int role = 0; role < 5; ++role) {
        int extra = (int)below(rng, 3) == 0 ? 1 : 0;
        if (role == 4 && chance(rng, 0.5)) extra = (int)below(rng, 3);
        for (int t = 0; t < extra; ++t) {
            int u = next++;
            for (int a : anchors_of(role)) edges.emplace_back(u, a);
            if (chance(rng, 0.3)) edges.emplace_back(u, role);  // sometimes a true twin of the anchor
            vclones[role].push_back(u);
        }
    }
    // the dominating layer is complete to the four path layers
    std::vector<int> v5all = {4};
    for (int u : vclones[4]) v5all.push_back(u);
    for (int role = 0; role < 4; ++role)
        for (int u : vclones[role])
            for (int d : v5all)
                if (d != 4) edges.emplace_back(u, d);
    for (std::size_t a = 0; a + 1 < vclones[4].size(); ++a)
        if (chance(rng, 0.3)) edges.emplace_back(vclones[4][a], vclones[4][a + 1]);

    int nx = 1 + (int)below(rng, 2);
    std::vector<int> xs;
    for (int t = 0; t < nx; ++t) {
        int u = next++;
        edges.emplace_back(u, 0);
        edges.emplace_back(u, 3);
        for (int c : vclones[0]) edges.emplace_back(u, c);
        for (int c : vclones[3]) edges.emplace_back(u, c);
        for (int prev : xs) edges.emplace_back(u, prev);  // keep x a clique
        xs.push_back(u);
    }

    std::vector<int> ws;
    int nw = (int)below(rng, 3);
    for (int t = 0; t < nw; ++t) {
        int u = next++;
        edges.emplace_back(u, v5all[(int)below(rng, v5all.size())]);
        for (int xv : xs) edges.emplace_back(u, xv);
        for (int prev : ws)
            if (chance(rng, 0.4)) edges.emplace_back(u, prev);
        ws.push_back(u);
    }

    int nz = ws.empty() ? 0 : (int)below(rng, 3);
    std::vector<int> zs;
    for (int t = 0; t < nz; ++t) {
        int u = next++;
        edges.emplace_back(u, ws[(int)below(rng, ws.size())]);
        for (int xv : xs) edges.emplace_back(u, xv);
        for (int prev : zs)
            if (chance(rng, 0.4)) edges.emplace_back(u, prev);
        zs.push_back(u);
    }
    if (chance(rng, 0.4) && !xs.empty()) {
        // one peelable clique hanging off x alone
        int sz = 1 + (int)below(rng, 2);
        std::vector<int> z0;
        for (int t = 0; t < sz; ++t) {
            int u = next++;
            for (int xv : xs) edges.emplace_back(u, xv);
            for (int prev : z0) edges.emplace_back(u, prev);
            z0.push_back(u);
        }
    }
    return Graph(next, edges);
}

}  // namespace detail

// Deterministic gem-anchored in-class instance: randomized attachments are
// re-validated against the class check, falling back to the plain gem plus
// one x-vertex (always in class) when the draw keeps failing.
inline Graph constructive_gem_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        Graph g = detail::try_gem_instance(rng);
        if (in_class(g)) return g;
    }
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 3}});
}

}  // namespace p6bull::gen
