#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "p6bull/graph.hpp"
#include "p6bull/listcolor.hpp"

namespace p6bull {

// Every vertex outside s sees s completely or not at all.
inline bool is_homogeneous(const Graph& g, const VertexSet& s) {
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        VertexSet t = g.neighbors(v) & s;
        if (!t.empty() && t != s) return false;
    }
    return true;
}

// Smallest homogeneous set containing {a, b}: repeatedly absorb any outside
// vertex with both a neighbor and a non-neighbor inside (such a splitter must
// belong to every homogeneous superset).
inline VertexSet homogeneous_closure(const Graph& g, int a, int b) {
    VertexSet s(g.order());
    s.add(a);
    s.add(b);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.order(); ++v) {
            if (s.contains(v)) continue;
            VertexSet t = g.neighbors(v) & s;
            if (!t.empty() && t != s) {
                s.add(v);
                grew = true;
            }
        }
    }
    return s;
}

// Maximal proper modules of a connected, co-connected graph; they partition
// the vertex set.  Two vertices share a part exactly when the closure of the
// pair stays proper, and the part is the union of those closures.
inline std::vector<VertexSet> maximal_modules(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("maximal_modules: graph too small");
    if (!is_connected(g) || !is_connected(complement(g)))
        throw std::invalid_argument("maximal_modules: graph and complement must both be connected");

    const VertexSet all = g.vertices();
    std::vector<VertexSet> parts;
    std::vector<int> owner(n, -1);
    for (int v = 0; v < n; ++v) {
        if (owner[v] >= 0) continue;
        VertexSet part(n);
        part.add(v);
        for (int u = 0; u < n; ++u) {
            if (u == v || owner[u] >= 0) continue;
            VertexSet h = homogeneous_closure(g, v, u);
            if (h != all) part |= h;
        }
        for (int u : part) owner[u] = (int)parts.size();
        parts.push_back(part);
    }
    for (const VertexSet& p : parts)
        if (!is_homogeneous(g, p)) throw std::logic_error("maximal_modules: part is not homogeneous");
    return parts;
}

namespace detail {

// Dense-mask helpers shared by the exhaustive subset scans (n <= 16).
inline std::vector<std::uint32_t> row_masks(const Graph& g) {
    std::vector<std::uint32_t> rows(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) rows[u] |= 1u << v;
    return rows;
}

inline bool mask_homogeneous(const std::vector<std::uint32_t>& rows, int n, std::uint32_t s) {
    for (int v = 0; v < n; ++v) {
        if (s & (1u << v)) continue;
        std::uint32_t t = rows[v] & s;
        if (t != 0 && t != s) return false;
    }
    return true;
}

inline bool mask_clique(const std::vector<std::uint32_t>& rows, std::uint32_t s) {
    std::uint32_t left = s;
    while (left) {
        int v = std::countr_zero(left);
        left &= left - 1;
        if ((rows[v] & s) != (s & ~(1u << v))) return false;
    }
    return true;
}

}  // namespace detail

// Number of modules under the nesting definition: homogeneous sets that nest
// with, or avoid, every other homogeneous set.  Exhaustive; meant for small
// graphs (the 2n bound is checked at this scale).
inline int count_modules(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw std::invalid_argument("count_modules: exhaustive scan capped at 16 vertices");
    if (n == 0) return 0;
    auto rows = detail::row_masks(g);
    std::vector<std::uint32_t> homog;
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        if (detail::mask_homogeneous(rows, n, s)) homog.push_back(s);
    int modules = 0;
    for (std::uint32_t s : homog) {
        bool ok = true;
        for (std::uint32_t t : homog) {
            if ((s & t) == 0 || (s & t) == s || (s & t) == t) continue;  // disjoint or nested
            ok = false;
            break;
        }
        if (ok) ++modules;
    }
    return modules;
}

// Every proper homogeneous set is a clique.  Exhaustive at small scale; above
// that, reduced to the maximal modules of the connected co-connected core
// (every proper homogeneous set lies inside a maximal module, and subsets of
// cliques are cliques).
inline bool is_quasi_prime(const Graph& g) {
    const int n = g.order();
    if (n <= 12) {
        if (n < 2) return true;
        auto rows = detail::row_masks(g);
        const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            if (std::popcount(s) < 2 || s == all) continue;
            if (detail::mask_homogeneous(rows, n, s) && !detail::mask_clique(rows, s)) return false;
        }
        return true;
    }
    auto comps = components(g);
    if (comps.size() >= 3) return false;  // the union of two components is homogeneous and edgeless across
    if (comps.size() == 2) return is_clique(g, comps[0]) && is_clique(g, comps[1]);
    if (!is_connected(complement(g))) {
        // co-components of size >= 2 are homogeneous and never cliques
        return is_clique(g, g.vertices());
    }
    for (const VertexSet& part : maximal_modules(g))
        if (!is_clique(g, part)) return false;
    return true;
}

// No proper homogeneous set at all.
inline bool is_prime(const Graph& g) {
    const int n = g.order();
    if (n <= 12) {
        if (n < 2) return true;
        auto rows = detail::row_masks(g);
        const std::uint32_t all = (1u << n) - 1;
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            if (std::popcount(s) < 2 || s == all) continue;
            if (detail::mask_homogeneous(rows, n, s)) return false;
        }
        return true;
    }
    if (!is_connected(g) || !is_connected(complement(g))) return false;
    for (const VertexSet& part : maximal_modules(g))
        if (part.count() != 1) return false;
    return true;
}

// Bookkeeping for one maximal module replaced by a clique of its chromatic size.
struct ReductionRecord {
    VertexSet module_vertices;        // in the parent graph
    int chi = 0;                      // 1..3
    std::vector<int> clique_vertices; // ids of the replacement clique in the reduced graph, ascending
    std::vector<int> member_class;    // per module member in ascending order: class label 1..chi,
                                      // classes numbered by first occurrence
};

struct ReductionLayer {
    int parent_order = 0;
    std::vector<int> to_parent;  // reduced vertex -> parent vertex, or -1 for fresh clique vertices
    std::vector<ReductionRecord> records;
};

struct QuasiPrimeReduction {
    Graph reduced;
    std::vector<ReductionLayer> layers;  // outermost first
};

namespace detail {

// One replacement pass over the maximal modules.  Returns nothing when some
// module needs more than three colors (the graph then needs more than four).
inline std::optional<ReductionLayer> reduce_once(const Graph& g, Graph& out) {
    auto parts = maximal_modules(g);
    // deterministic order: by least member
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });

    ReductionLayer layer;
    layer.parent_order = g.order();
    struct Placed {
        bool replaced;
        std::vector<int> new_ids;  // ascending
        int part_index;
    };
    std::vector<Placed> placed;
    std::vector<SmallChromatic> chroma(parts.size());

    int next_id = 0;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const VertexSet& part = parts[pi];
        if (is_clique(g, part)) {
            Placed pl{false, {}, (int)pi};
            for (int v : part) {
                pl.new_ids.push_back(next_id++);
                layer.to_parent.push_back(v);
            }
            placed.push_back(std::move(pl));
            continue;
        }
        auto sub = induced(g, part);
        chroma[pi] = chromatic_small(sub.graph);
        if (chroma[pi].chi > 3) return std::nullopt;
        Placed pl{true, {}, (int)pi};
        for (int t = 0; t < chroma[pi].chi; ++t) {
            pl.new_ids.push_back(next_id++);
            layer.to_parent.push_back(-1);
        }
        placed.push_back(std::move(pl));
    }

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < placed.size(); ++i) {
        const VertexSet& pa = parts[placed[i].part_index];
        // inside a kept clique part: complete; inside a replacement: complete
        for (std::size_t a = 0; a < placed[i].new_ids.size(); ++a)
            for (std::size_t b = a + 1; b < placed[i].new_ids.size(); ++b)
                edges.emplace_back(placed[i].new_ids[a], placed[i].new_ids[b]);
        // distinct maximal modules are pairwise complete or anticomplete
        for (std::size_t j = i + 1; j < placed.size(); ++j) {
            const VertexSet& pb = parts[placed[j].part_index];
            if (!g.adjacent(pa.first(), pb.first())) continue;
            for (int a : placed[i].new_ids)
                for (int b : placed[j].new_ids) edges.emplace_back(a, b);
        }
    }
    out = Graph(next_id, edges);

    for (const Placed& pl : placed) {
        if (!pl.replaced) continue;
        const VertexSet& part = parts[pl.part_index];
        const SmallChromatic& sc = chroma[pl.part_index];
        ReductionRecord rec;
        rec.module_vertices = part;
        rec.chi = sc.chi;
        rec.clique_vertices = pl.new_ids;
        // relabel the stored coloring so classes are numbered by first occurrence
        std::vector<int> relabel(sc.chi + 1, 0);
        int used = 0;
        auto members = part.to_vector();  // ascending, matching the induced subgraph order
        for (std::size_t t = 0; t < members.size(); ++t) {
            int raw = sc.coloring->color[t];
            if (!relabel[raw]) relabel[raw] = ++used;
            rec.member_class.push_back(relabel[raw]);
        }
        layer.records.push_back(std::move(rec));
    }
    return layer;
}

}  // namespace detail

// Replace every non-clique maximal module by a clique of its chromatic size
// with the same outside neighborhood.  Nothing is returned when some module
// already needs four colors (its complete outside neighborhood is non-empty,
// so the whole graph would need five).  One pass normally suffices; if the
// result is somehow not quasi-prime the pass repeats on the strictly smaller
// graph rather than trusting that argument.
inline std::optional<QuasiPrimeReduction> quasi_prime_reduce(const Graph& g) {
    if (!is_connected(g) || !is_connected(complement(g)))
        throw std::invalid_argument("quasi_prime_reduce: graph and complement must both be connected");

    QuasiPrimeReduction out{g, {}};
    while (!is_quasi_prime(out.reduced)) {
        Graph next;
        auto layer = detail::reduce_once(out.reduced, next);
        if (!layer) return std::nullopt;
        if (next.order() >= out.reduced.order())
            throw std::logic_error("quasi_prime_reduce: pass failed to shrink a non-quasi-prime graph");
        if (!is_connected(next) || !is_connected(complement(next)))
            throw std::logic_error("quasi_prime_reduce: reduction lost (co-)connectivity");
        out.layers.push_back(std::move(*layer));
        out.reduced = std::move(next);
    }
    return out;
}

// Map a proper coloring of the reduced graph back onto the original: each
// replaced module reuses the distinct colors its clique received, class by
// class of the stored module coloring.
inline Coloring lift_coloring(const Coloring& reduced_coloring, const QuasiPrimeReduction& r) {
    if (!verify_coloring(r.reduced, reduced_coloring))
        throw std::invalid_argument("lift_coloring: coloring of the reduced graph is improper");

    Coloring cur = reduced_coloring;
    for (auto it = r.layers.rbegin(); it != r.layers.rend(); ++it) {
        const ReductionLayer& layer = *it;
        Coloring parent{cur.palette, std::vector<int>(layer.parent_order, 0)};
        for (std::size_t i = 0; i < layer.to_parent.size(); ++i)
            if (layer.to_parent[i] >= 0) parent.color[layer.to_parent[i]] = cur.color[i];
        for (const ReductionRecord& rec : layer.records) {
            std::vector<int> palette;
            for (int kv : rec.clique_vertices) palette.push_back(cur.color[kv]);
            auto members = rec.module_vertices.to_vector();
            for (std::size_t t = 0; t < members.size(); ++t)
                parent.color[members[t]] = palette[rec.member_class[t] - 1];
        }
        cur = std::move(parent);
    }
    return cur;
}

}  // namespace p6bull
