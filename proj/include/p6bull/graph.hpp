#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p6bull {

// Subset of the vertex range 0..n-1 of a fixed universe, stored as a bit vector.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && ((w_[v >> 6] >> (v & 63)) & 1) != 0;
    }

    void add(int v) {
        check(v);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check(v);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

    // First member, or -1 when empty.
    int first() const { return next(0); }

    // Smallest member >= v, or -1.
    int next(int v) const {
        if (v < 0) v = 0;
        while (v < n_) {
            std::uint64_t word = w_[v >> 6] >> (v & 63);
            if (word) return v + std::countr_zero(word);
            v = (v | 63) + 1;
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next(v_ + 1);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe");
    }

    void trim() {
        if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Immutable simple undirected graph over vertices 0..n-1 with O(1) adjacency.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: endpoint outside 0.." + std::to_string(n - 1));
            if (u == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
            if (!adj_[u].contains(v)) {
                adj_[u].add(v);
                adj_[v].add(u);
                ++m_;
            }
        }
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges)
        : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Total color map with palette {1..palette}.
struct Coloring {
    int palette = 4;
    std::vector<int> color;  // color[v] in 1..palette
};

// True iff v is adjacent to every vertex of s.  v must lie outside s.
inline bool is_complete_to(const Graph& g, int v, const VertexSet& s) {
    if (s.contains(v)) throw std::invalid_argument("is_complete_to: vertex belongs to the set");
    return s.subset_of(g.neighbors(v));
}

// True iff v has no neighbor in s.  v must lie outside s.
inline bool is_anticomplete_to(const Graph& g, int v, const VertexSet& s) {
    if (s.contains(v)) throw std::invalid_argument("is_anticomplete_to: vertex belongs to the set");
    return !g.neighbors(v).intersects(s);
}

// Every vertex of a adjacent to every vertex of b (a and b disjoint).
inline bool sets_complete(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        if (!b.subset_of(g.neighbors(v))) return false;
    return true;
}

inline bool sets_anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        if (g.neighbors(v).intersects(b)) return false;
    return true;
}

// Connected components of g[s], each returned as a vertex set of g.
inline std::vector<VertexSet> components_in(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet seen(g.order());
    for (int v : s) {
        if (seen.contains(v)) continue;
        VertexSet comp(g.order());
        std::vector<int> stack{v};
        seen.add(v);
        comp.add(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u) & s) {
                if (!seen.contains(w)) {
                    seen.add(w);
                    comp.add(w);
                    stack.push_back(w);
                }
            }
        }
        out.push_back(comp);
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_in(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

// Induced subgraph plus the mapping from its vertices back to the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new index -> parent vertex, ascending
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    std::vector<int> back(g.order(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) back[out.to_parent[i]] = (int)i;
    std::vector<std::pair<int, int>> edges;
    for (int u : s)
        for (int v : g.neighbors(u) & s)
            if (u < v) edges.emplace_back(back[u], back[v]);
    out.graph = Graph((int)out.to_parent.size(), edges);
    return out;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s) {
        VertexSet rest = s;
        rest.remove(v);
        if (!rest.subset_of(g.neighbors(v))) return false;
    }
    return true;
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

// Two-sides split of a connected bipartite induced subgraph; the side holding
// the least vertex comes first.  Returns nothing when g[s] has an odd cycle.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition_of_component(const Graph& g,
                                                                               const VertexSet& s) {
    if (s.empty()) return std::make_pair(VertexSet(g.order()), VertexSet(g.order()));
    VertexSet side[2] = {VertexSet(g.order()), VertexSet(g.order())};
    std::vector<int> mark(g.order(), -1);
    int root = s.first();
    std::vector<int> queue{root};
    mark[root] = 0;
    side[0].add(root);
    std::size_t head = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        for (int v : g.neighbors(u) & s) {
            if (mark[v] < 0) {
                mark[v] = 1 - mark[u];
                side[mark[v]].add(v);
                queue.push_back(v);
            } else if (mark[v] == mark[u]) {
                return std::nullopt;
            }
        }
    }
    if ((int)queue.size() != s.count())
        throw std::invalid_argument("bipartition_of_component: induced subgraph is not connected");
    return std::make_pair(side[0], side[1]);
}

// True iff the map is total on V(g), uses colors 1..palette, and no edge is monochromatic.
inline bool verify_coloring(const Graph& g, const Coloring& c) {
    if ((int)c.color.size() != g.order())
        throw std::invalid_argument("verify_coloring: color map does not cover the vertex set");
    for (int v = 0; v < g.order(); ++v)
        if (c.color[v] < 1 || c.color[v] > c.palette) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.color[u] == c.color[v]) return false;
    return true;
}

}  // namespace p6bull
