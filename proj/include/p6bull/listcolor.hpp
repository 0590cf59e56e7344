#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "p6bull/graph.hpp"
#include "p6bull/patterns.hpp"

namespace p6bull {

// Per-vertex allowed colors as a bitmask: bit i stands for color i+1.
using ColorMask = std::uint8_t;
using ListAssignment = std::vector<ColorMask>;

inline constexpr ColorMask kFourColors = 0xF;

inline ColorMask color_bit(int color) { return ColorMask(1u << (color - 1)); }
inline int list_size(ColorMask m) { return std::popcount(unsigned(m)); }
inline int lowest_color(ColorMask m) { return std::countr_zero(unsigned(m)) + 1; }

namespace detail {

// Implication-graph 2-SAT over one boolean per vertex (which of its <=2 list
// slots is chosen).  Node 2v+s stands for "vertex v takes slot s".
class TwoSat {
public:
    explicit TwoSat(int vars) : n_(vars), g_(2 * vars) {}

    // clause (a or b) over literal nodes
    void add_clause(int a, int b) {
        g_[a ^ 1].push_back(b);
        g_[b ^ 1].push_back(a);
    }

    // Slot per variable, or nothing when unsatisfiable.
    std::optional<std::vector<int>> solve() const {
        const int nodes = 2 * n_;
        std::vector<int> comp(nodes, -1), low(nodes), idx(nodes, -1), stk;
        std::vector<char> on_stack(nodes, 0);
        int next_index = 0, next_comp = 0;
        stk.reserve(nodes);

        // iterative Tarjan
        std::vector<std::pair<int, std::size_t>> work;
        for (int start = 0; start < nodes; ++start) {
            if (idx[start] >= 0) continue;
            work.emplace_back(start, 0);
            while (!work.empty()) {
                auto& [u, ei] = work.back();
                if (ei == 0) {
                    idx[u] = low[u] = next_index++;
                    stk.push_back(u);
                    on_stack[u] = 1;
                }
                bool descended = false;
                while (ei < g_[u].size()) {
                    int w = g_[u][ei++];
                    if (idx[w] < 0) {
                        work.emplace_back(w, 0);
                        descended = true;
                        break;
                    }
                    if (on_stack[w]) low[u] = std::min(low[u], idx[w]);
                }
                if (descended) continue;
                if (low[u] == idx[u]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        if (w == u) break;
                    }
                    ++next_comp;
                }
                int fin = u;
                work.pop_back();
                if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[fin]);
            }
        }

        std::vector<int> slot(n_);
        for (int v = 0; v < n_; ++v) {
            if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
            // Tarjan numbers components in reverse topological order, so the
            // literal whose component comes later in that order is safe to pick.
            slot[v] = comp[2 * v + 1] < comp[2 * v] ? 1 : 0;
        }
        return slot;
    }

private:
    int n_;
    std::vector<std::vector<int>> g_;
};

inline void check_sound(const Graph& g, const ListAssignment& lists, const Coloring& c, const char* who) {
    if (!verify_coloring(g, c)) throw std::logic_error(std::string(who) + ": produced an improper coloring");
    for (int v = 0; v < g.order(); ++v)
        if (!(lists[v] & color_bit(c.color[v])))
            throw std::logic_error(std::string(who) + ": color outside the vertex list");
}

}  // namespace detail

// List coloring when every list has at most two colors, via 2-satisfiability.
// Singleton lists become forced literals; an empty list is plain infeasible.
inline std::optional<Coloring> two_list_color(const Graph& g, const ListAssignment& lists) {
    const int n = g.order();
    if ((int)lists.size() != n) throw std::invalid_argument("two_list_color: list count != vertex count");
    std::vector<std::array<int, 2>> slot_color(n, {0, 0});
    for (int v = 0; v < n; ++v) {
        int sz = list_size(lists[v]);
        if (sz > 2) throw std::invalid_argument("two_list_color: a list has more than two colors");
        if (sz == 0) return std::nullopt;
        int c0 = lowest_color(lists[v]);
        slot_color[v][0] = c0;
        slot_color[v][1] = sz == 2 ? lowest_color(ColorMask(lists[v] & ~color_bit(c0))) : 0;
    }

    detail::TwoSat ts(n);
    for (int v = 0; v < n; ++v)
        if (slot_color[v][1] == 0) ts.add_clause(2 * v, 2 * v);  // force slot 0
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int su = 0; su < (slot_color[u][1] ? 2 : 1); ++su)
                for (int sv = 0; sv < (slot_color[v][1] ? 2 : 1); ++sv)
                    if (slot_color[u][su] == slot_color[v][sv])
                        ts.add_clause(2 * u + (1 - su), 2 * v + (1 - sv));
        }
    }

    auto model = ts.solve();
    if (!model) return std::nullopt;
    Coloring c{4, std::vector<int>(n)};
    for (int v = 0; v < n; ++v) c.color[v] = slot_color[v][(*model)[v]];
    detail::check_sound(g, lists, c, "two_list_color");
    return c;
}

// Exact list coloring for lists inside {1..4}, by backtracking with forward
// pruning: assigned colors are struck from neighbor lists, branching on a
// vertex with the fewest remaining colors.
inline std::optional<Coloring> exact_list_color(const Graph& g, const ListAssignment& lists) {
    const int n = g.order();
    if ((int)lists.size() != n) throw std::invalid_argument("exact_list_color: list count != vertex count");
    std::vector<ColorMask> live(lists.begin(), lists.end());
    std::vector<int> color(n, 0);

    auto dfs = [&](auto&& self, int assigned) -> bool {
        if (assigned == n) return true;
        int v = -1, best = 5;
        for (int u = 0; u < n; ++u) {
            if (color[u]) continue;
            int sz = list_size(live[u]);
            if (sz < best) best = sz, v = u;
        }
        if (best == 0) return false;
        ColorMask options = live[v];
        for (int c = 1; c <= 4; ++c) {
            if (!(options & color_bit(c))) continue;
            color[v] = c;
            std::vector<int> struck;
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (color[u]) continue;
                if (live[u] & color_bit(c)) {
                    live[u] = ColorMask(live[u] & ~color_bit(c));
                    struck.push_back(u);
                    if (live[u] == 0) dead = true;
                }
            }
            if (!dead && self(self, assigned + 1)) return true;
            for (int u : struck) live[u] = ColorMask(live[u] | color_bit(c));
            color[v] = 0;
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    Coloring c{4, color};
    detail::check_sound(g, lists, c, "exact_list_color");
    return c;
}

// Exact k-coloring by saturation-guided backtracking with the usual symmetry
// break: at most one fresh color may be introduced at each node.
inline std::optional<Coloring> exact_k_color(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("exact_k_color: palette must be positive");
    const int n = g.order();
    Coloring out{k, std::vector<int>(n, 0)};
    if (n == 0) return out;
    if (k >= n) {
        for (int v = 0; v < n; ++v) out.color[v] = v + 1;
        return out;
    }

    const int words = (k + 64) / 64;
    std::vector<std::uint64_t> sat((std::size_t)n * words, 0);
    std::vector<int> sat_count(n, 0), color(n, 0);
    auto sat_has = [&](int v, int c) {
        return (sat[(std::size_t)v * words + (c - 1) / 64] >> ((c - 1) % 64)) & 1;
    };
    auto sat_add = [&](int v, int c) { sat[(std::size_t)v * words + (c - 1) / 64] |= std::uint64_t{1} << ((c - 1) % 64); };
    auto sat_del = [&](int v, int c) { sat[(std::size_t)v * words + (c - 1) / 64] &= ~(std::uint64_t{1} << ((c - 1) % 64)); };

    auto dfs = [&](auto&& self, int assigned, int max_used) -> bool {
        if (assigned == n) return true;
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u]) continue;
            if (v < 0 || sat_count[u] > sat_count[v] ||
                (sat_count[u] == sat_count[v] && g.degree(u) > g.degree(v)))
                v = u;
        }
        int limit = std::min(max_used + 1, k);
        if (sat_count[v] >= limit) return false;
        for (int c = 1; c <= limit; ++c) {
            if (sat_has(v, c)) continue;
            color[v] = c;
            std::vector<int> bumped;
            for (int u : g.neighbors(v)) {
                if (color[u] || sat_has(u, c)) continue;
                sat_add(u, c);
                ++sat_count[u];
                bumped.push_back(u);
            }
            if (self(self, assigned + 1, std::max(max_used, c))) return true;
            for (int u : bumped) {
                sat_del(u, c);
                --sat_count[u];
            }
            color[v] = 0;
        }
        return false;
    };

    if (!dfs(dfs, 0, 0)) return std::nullopt;
    out.color = color;
    if (!verify_coloring(g, out)) throw std::logic_error("exact_k_color: produced an improper coloring");
    return out;
}

// Chromatic number capped at four: chi in 0..4, or 5 meaning "at least five".
// Fast paths handle the edgeless and bipartite cases before the oracle runs.
struct SmallChromatic {
    int chi = 0;
    std::optional<Coloring> coloring;  // present iff chi <= 4
};

inline SmallChromatic chromatic_small(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {0, Coloring{1, {}}};
    if (g.edge_count() == 0) return {1, Coloring{1, std::vector<int>(n, 1)}};
    {
        // 2-coloring attempt, component by component
        Coloring two{2, std::vector<int>(n, 0)};
        bool ok = true;
        for (const VertexSet& comp : components(g)) {
            auto bip = bipartition_of_component(g, comp);
            if (!bip) {
                ok = false;
                break;
            }
            for (int v : bip->first) two.color[v] = 1;
            for (int v : bip->second) two.color[v] = 2;
        }
        if (ok) return {2, two};
    }
    if (auto c3 = exact_k_color(g, 3)) return {3, c3};
    if (auto c4 = exact_k_color(g, 4)) return {4, c4};
    return {5, std::nullopt};
}

// Four-coloring by precoloring a magnet: every proper 4-coloring of g[f] is
// tried in lexicographic order and extended through a 2-list instance on the
// rest (lists have size <= 2 exactly because f is a magnet).  trials, when
// given, counts the precolorings examined.
inline std::optional<Coloring> magnet_color(const Graph& g, const VertexSet& f, long* trials = nullptr) {
    if (!is_magnet(g, f)) throw std::invalid_argument("magnet_color: set is not a magnet");
    if (f.count() > 16) throw std::invalid_argument("magnet_color: precolored set too large");

    const std::vector<int> fs = f.to_vector();
    InducedSubgraph rest = induced(g, g.vertices() - f);
    std::vector<int> fcol(fs.size(), 0);

    auto dfs = [&](auto&& self, std::size_t i) -> std::optional<Coloring> {
        if (i == fs.size()) {
            if (trials) ++*trials;
            ListAssignment lists(rest.graph.order(), kFourColors);
            for (int j = 0; j < rest.graph.order(); ++j) {
                int v = rest.to_parent[j];
                for (std::size_t t = 0; t < fs.size(); ++t)
                    if (g.adjacent(v, fs[t])) lists[j] = ColorMask(lists[j] & ~color_bit(fcol[t]));
            }
            auto ext = two_list_color(rest.graph, lists);
            if (!ext) return std::nullopt;
            Coloring full{4, std::vector<int>(g.order(), 0)};
            for (std::size_t t = 0; t < fs.size(); ++t) full.color[fs[t]] = fcol[t];
            for (int j = 0; j < rest.graph.order(); ++j) full.color[rest.to_parent[j]] = ext->color[j];
            if (!verify_coloring(g, full)) throw std::logic_error("magnet_color: improper extension");
            return full;
        }
        for (int c = 1; c <= 4; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (fcol[j] == c && g.adjacent(fs[j], fs[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            fcol[i] = c;
            if (auto r = self(self, i + 1)) return r;
        }
        fcol[i] = 0;
        return std::nullopt;
    };
    return dfs(dfs, 0);
}

}  // namespace p6bull
