#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "p6bull/graph.hpp"
#include "p6bull/listcolor.hpp"
#include "p6bull/modular.hpp"
#include "p6bull/outcome.hpp"
#include "p6bull/patterns.hpp"

namespace p6bull {

// Vertex partition anchored at an induced gem: anchor[0..3] is the dominated
// path, anchor[4] the dominating vertex.  v[i] collects the vertices whose
// attachment to the anchors matches anchor i; x, w, z are the remaining
// attachment types, with z split into z1 (components with a neighbor in w)
// and z0.  Vertices matching no definition land in `uncovered`; the structure
// forces that set empty, and verify_partition reports it otherwise.
struct GemPartition {
    std::array<int, 5> anchor{};
    std::array<VertexSet, 5> v;
    VertexSet x, w, z, z0, z1;
    VertexSet uncovered;
};

inline GemPartition build_partition(const Graph& g, const Embedding& gem) {
    const Pattern& pat = pattern(PatternKind::Gem);
    if (gem.kind != PatternKind::Gem || (int)gem.map.size() != pat.order)
        throw std::invalid_argument("build_partition: embedding is not a gem");
    for (int i = 0; i < 5; ++i) {
        if (gem.map[i] < 0 || gem.map[i] >= g.order())
            throw std::invalid_argument("build_partition: embedding out of range");
        for (int j = i + 1; j < 5; ++j)
            if (gem.map[i] == gem.map[j] || g.adjacent(gem.map[i], gem.map[j]) != pat.adjacent(i, j))
                throw std::invalid_argument("build_partition: embedding does not induce a gem");
    }

    const int n = g.order();
    GemPartition p;
    for (int i = 0; i < 5; ++i) {
        p.anchor[i] = gem.map[i];
        p.v[i] = VertexSet(n);
    }
    p.x = VertexSet(n);
    p.w = VertexSet(n);
    p.z = VertexSet(n);
    p.uncovered = VertexSet(n);

    VertexSet plain(n);  // vertices anticomplete to the four path anchors
    for (int u = 0; u < n; ++u) {
        std::uint8_t ns = 0;
        for (int r = 0; r < 5; ++r)
            if (u != p.anchor[r] && g.adjacent(u, p.anchor[r])) ns |= std::uint8_t(1u << r);
        int match = -1;
        for (int r = 0; r < 5; ++r) {
            if ((ns & ~std::uint8_t(1u << r)) == pat.adj[r]) {
                match = r;
                break;
            }
        }
        if (match >= 0) {
            p.v[match].add(u);
        } else if ((ns & 0b01001) == 0b01001 && (ns & 0b00110) == 0) {  // sees both path ends, neither middle
            p.x.add(u);
        } else if ((ns & 0b01111) == 0) {
            plain.add(u);
        } else {
            p.uncovered.add(u);
        }
    }
    for (int u : plain) {
        if (g.neighbors(u).intersects(p.v[4]))
            p.w.add(u);
        else
            p.z.add(u);
    }
    p.z1 = VertexSet(n);
    p.z0 = VertexSet(n);
    for (const VertexSet& comp : components_in(g, p.z)) {
        bool touches_w = false;
        for (int u : comp) {
            if (g.neighbors(u).intersects(p.w)) {
                touches_w = true;
                break;
            }
        }
        if (touches_w)
            p.z1 |= comp;
        else
            p.z0 |= comp;
    }
    return p;
}

// Literal checks of the structural facts the coloring procedure relies on.
// Returns the identifiers of the failing ones, empty on every input that
// satisfies the hypotheses (quasi-prime, in class, no K5, no double wheel,
// none of F0..F6).  A non-empty answer on such an input is a discrepancy to
// surface, never to swallow.
inline std::vector<std::string> verify_partition(const Graph& g, const GemPartition& p) {
    std::vector<std::string> bad;
    const VertexSet v14 = p.v[0] | p.v[3];
    const VertexSet v1234 = p.v[0] | p.v[1] | p.v[2] | p.v[3];

    if (p.x.empty()) bad.push_back("x-nonempty");

    if (!(sets_anticomplete(g, p.x, p.v[1] | p.v[2] | p.v[4]) && sets_complete(g, p.x, v14)))
        bad.push_back("x-attachments");

    {
        VertexSet covered = v1234 | p.v[4] | p.x | p.w | p.z;
        bool disjoint = true;
        const VertexSet* sets[8] = {&p.v[0], &p.v[1], &p.v[2], &p.v[3], &p.v[4], &p.x, &p.w, &p.z};
        for (int i = 0; i < 8 && disjoint; ++i)
            for (int j = i + 1; j < 8 && disjoint; ++j)
                if (sets[i]->intersects(*sets[j])) disjoint = false;
        if (!disjoint || covered != g.vertices()) bad.push_back("cover");
    }

    if (!sets_complete(g, p.v[4], v1234)) bad.push_back("v5-complete");
    if (!(sets_complete(g, p.w, p.x) && sets_anticomplete(g, p.w, v1234))) bad.push_back("w-attachments");
    if (!sets_anticomplete(g, p.z, v1234)) bad.push_back("z-anticomplete");
    if (!sets_complete(g, p.z1, p.x)) bad.push_back("z1-complete-to-x");

    for (const VertexSet& comp : components_in(g, p.x)) {
        if (!is_homogeneous(g, comp) || !is_clique(g, comp)) {
            bad.push_back("x-component-cliques");
            break;
        }
    }
    for (const VertexSet& comp : components_in(g, p.z0)) {
        if (!is_homogeneous(g, comp) || !is_clique(g, comp)) {
            bad.push_back("z0-component-cliques");
            break;
        }
    }

    {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u) {
            if (p.x.contains(u) || p.z0.contains(u)) continue;
            VertexSet t = g.neighbors(u) & p.x;
            if (!t.empty() && t != p.x) ok = false;
        }
        if (!ok) bad.push_back("x-homogeneous-after-peel");
    }

    if (!p.z1.empty()) {
        bool found = false;
        for (int wv : p.w) {
            VertexSet in = g.neighbors(wv) & p.z1;
            if (in.empty()) continue;
            if (sets_complete(g, in, p.z1 - g.neighbors(wv))) {
                found = true;
                break;
            }
        }
        if (!found) bad.push_back("w-star");
    }
    return bad;
}

namespace gemdetail {

struct Trial {
    enum Kind { Fail, Success, Violation } kind = Fail;
    Coloring coloring;
    std::vector<std::string> ids;

    static Trial fail() { return {}; }
    static Trial success(Coloring c) { return {Success, std::move(c), {}}; }
    static Trial violation(std::string id) { return {Violation, {}, {std::move(id)}}; }
};

inline Outcome trial_outcome(Trial t) {
    switch (t.kind) {
        case Trial::Success: return Outcome::colorable(std::move(t.coloring));
        case Trial::Violation: return Outcome::violation(std::move(t.ids));
        case Trial::Fail: return Outcome::infeasible();
    }
    return Outcome::infeasible();
}

// Finish a precoloring with one 2-list instance over every unset vertex
// (pre[v] == 0 means unset).  Lists wider than two colors contradict the
// structure the caller established and are surfaced, not clamped.
inline Trial finish_two_list(const Graph& g, const std::vector<int>& pre, DecideStats* stats) {
    VertexSet rest(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (pre[v] == 0) rest.add(v);
    InducedSubgraph sub = induced(g, rest);
    ListAssignment lists(sub.graph.order(), kFourColors);
    for (int j = 0; j < sub.graph.order(); ++j) {
        int v = sub.to_parent[j];
        for (int u : g.neighbors(v))
            if (pre[u]) lists[j] = ColorMask(lists[j] & ~color_bit(pre[u]));
        if (list_size(lists[j]) > 2) return Trial::violation("precolor-list-too-wide");
    }
    if (stats) ++stats->twosat_calls;
    auto ext = two_list_color(sub.graph, lists);
    if (!ext) return Trial::fail();
    Coloring full{4, pre};
    for (int j = 0; j < sub.graph.order(); ++j) full.color[sub.to_parent[j]] = ext->color[j];
    if (!verify_coloring(g, full)) return Trial::violation("improper-assembly");
    return Trial::success(std::move(full));
}

// All proper 4-colorings of g[pvec] in lexicographic order (vertices in pvec
// order, colors ascending); stops at the first Success or Violation.
template <class Handler>
inline Trial enumerate_precolorings(const Graph& g, const std::vector<int>& pvec, Handler&& handler) {
    std::vector<int> pre(g.order(), 0);
    auto dfs = [&](auto&& self, std::size_t i) -> Trial {
        if (i == pvec.size()) return handler(pre);
        for (int c = 1; c <= 4; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (pre[pvec[j]] == c && g.adjacent(pvec[j], pvec[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pre[pvec[i]] = c;
            Trial t = self(self, i + 1);
            if (t.kind != Trial::Fail) return t;
        }
        pre[pvec[i]] = 0;
        return Trial::fail();
    };
    return dfs(dfs, 0);
}

// Continuation once every vertex of v[4] is forced to the single color c5:
// branch on whether x0 shares that color.  If it does, the precoloring splits
// into a 2-list instance on v[0..3] and an exact 3-coloring of w|z (the two
// sides are anticomplete); otherwise the precoloring is widened near z1 until
// every list closes to width two and one joint 2-list instance finishes.
inline Trial single_forced(const Graph& g, const GemPartition& p, std::vector<int> pre, int c5,
                           DecideStats* stats) {
    if (stats) ++stats->precolorings;
    if (!is_stable(g, p.v[4])) return Trial::fail();  // v[4] cannot take one color
    for (int u : p.v[4]) pre[u] = c5;
    const int x0 = p.x.first();

    if (pre[x0] == c5) {
        VertexSet u4(g.order());
        for (int i = 0; i < 4; ++i)
            for (int u : p.v[i])
                if (!pre[u]) u4.add(u);

        InducedSubgraph sub = induced(g, u4);
        ListAssignment lists(sub.graph.order(), kFourColors);
        for (int j = 0; j < sub.graph.order(); ++j) {
            int v = sub.to_parent[j];
            for (int u : g.neighbors(v))
                if (pre[u]) lists[j] = ColorMask(lists[j] & ~color_bit(pre[u]));
            if (list_size(lists[j]) > 2) return Trial::violation("precolor-list-too-wide");
        }
        if (stats) ++stats->twosat_calls;
        auto part1 = two_list_color(sub.graph, lists);
        if (!part1) return Trial::fail();

        InducedSubgraph wzsub = induced(g, p.w | p.z);
        if (stats) ++stats->oracle_calls;
        auto part2 = exact_k_color(wzsub.graph, 3);
        if (!part2) return Trial::fail();

        int free_colors[3];
        int t = 0;
        for (int c = 1; c <= 4; ++c)
            if (c != c5) free_colors[t++] = c;
        Coloring full{4, pre};
        for (int j = 0; j < sub.graph.order(); ++j) full.color[sub.to_parent[j]] = part1->color[j];
        for (int j = 0; j < wzsub.graph.order(); ++j)
            full.color[wzsub.to_parent[j]] = free_colors[part2->color[j] - 1];
        if (!verify_coloring(g, full)) return Trial::violation("improper-assembly");
        return Trial::success(std::move(full));
    }

    // x0 colored differently from v[4]: vertices of z1 would keep three free
    // colors, so one w-vertex whose z1-neighborhood dominates the rest (and,
    // if needed, one of its z1-neighbors) joins the precolored set.
    std::vector<int> added;
    if (!p.z1.empty()) {
        int wstar = -1;
        for (int wv : p.w) {
            VertexSet in = g.neighbors(wv) & p.z1;
            if (in.empty()) continue;
            if (sets_complete(g, in, p.z1 - g.neighbors(wv))) {
                wstar = wv;
                break;
            }
        }
        if (wstar < 0) return Trial::violation("w-star-missing");
        added.push_back(wstar);
        if (!p.z1.subset_of(g.neighbors(wstar))) added.push_back((g.neighbors(wstar) & p.z1).first());
    }

    auto dfs = [&](auto&& self, std::size_t i) -> Trial {
        if (i == added.size()) return finish_two_list(g, pre, stats);
        int v = added[i];
        for (int c = 1; c <= 4; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (pre[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pre[v] = c;
            Trial t = self(self, i + 1);
            if (t.kind != Trial::Fail) return t;
            pre[v] = 0;
        }
        return Trial::fail();
    };
    return dfs(dfs, 0);
}

// Two colors on the path anchors and every v[i] stable: v[0]|v[2] and
// v[1]|v[3] are pinned to the two path colors (the cross pairs are stable in
// any graph this procedure legitimately reaches), each big component of v[4]
// is oriented by its w-attachments and contributes one chosen vertex, and the
// rest reduces to an exact 3-coloring of z1, w, the chosen vertices and the
// first two anchors.
inline Trial case_two_stable(const Graph& g, const GemPartition& p, const std::vector<int>& f,
                             DecideStats* stats) {
    if (stats) ++stats->precolorings;
    const int alpha = f[p.anchor[0]];
    const int beta = f[p.anchor[1]];
    const int delta = f[p.x.first()];
    int gamma = 0;
    for (int c = 1; c <= 4; ++c)
        if (c != alpha && c != beta && c != delta) gamma = c;

    VertexSet v13 = p.v[0] | p.v[2];
    VertexSet v24 = p.v[1] | p.v[3];
    if (!is_stable(g, v13) || !is_stable(g, v24)) return Trial::violation("cross-pair-not-stable");

    struct BigComp {
        VertexSet a, b;  // oriented so no w-vertex sees b alone
        int chosen;
    };
    std::vector<BigComp> big;
    VertexSet singles(g.order());
    VertexSet chosen(g.order());
    for (const VertexSet& comp : components_in(g, p.v[4])) {
        if (comp.count() == 1) {
            singles |= comp;
            continue;
        }
        auto bip = bipartition_of_component(g, comp);
        if (!bip) return Trial::fail();  // v[4] must split into the two remaining colors
        VertexSet a = bip->first, b = bip->second;
        VertexSet wa(g.order()), wb(g.order()), wi(g.order());
        for (int wv : p.w) {
            bool na = g.neighbors(wv).intersects(a);
            bool nb = g.neighbors(wv).intersects(b);
            if (na && nb)
                wi.add(wv);
            else if (na)
                wa.add(wv);
            else if (nb)
                wb.add(wv);
        }
        if (!wa.empty() && !wb.empty()) return Trial::violation("split-attachment");
        if (!wb.empty()) std::swap(a, b);
        int di = -1;
        for (int d : b) {
            if (wi.subset_of(g.neighbors(d))) {
                di = d;
                break;
            }
        }
        if (di < 0) return Trial::violation("no-vertex-complete-to-wi");
        chosen.add(di);
        big.push_back({a, b, di});
    }
    if (!is_stable(g, chosen)) return Trial::violation("chosen-not-stable");

    VertexSet hset = p.z1 | p.w | chosen;
    hset.add(p.anchor[0]);
    hset.add(p.anchor[1]);
    InducedSubgraph h = induced(g, hset);
    if (stats) ++stats->oracle_calls;
    auto gh = exact_k_color(h.graph, 3);
    if (!gh) return Trial::fail();

    // relabel the 3-coloring so the two anchors carry alpha and beta
    int c1 = 0, c2 = 0;
    for (int j = 0; j < h.graph.order(); ++j) {
        if (h.to_parent[j] == p.anchor[0]) c1 = gh->color[j];
        if (h.to_parent[j] == p.anchor[1]) c2 = gh->color[j];
    }
    int back[4] = {0, 0, 0, 0};
    back[c1 - 1] = alpha;
    back[c2 - 1] = beta;
    for (int c = 1; c <= 3; ++c)
        if (c != c1 && c != c2) back[c - 1] = gamma;

    Coloring full{4, f};
    for (int u : v13) full.color[u] = alpha;
    for (int u : v24) full.color[u] = beta;
    for (const BigComp& bc : big) {
        for (int u : bc.a) full.color[u] = delta;
        for (int u : bc.b) full.color[u] = gamma;
    }
    for (int u : singles) full.color[u] = delta;
    full.color[p.x.first()] = delta;
    for (int j = 0; j < h.graph.order(); ++j) full.color[h.to_parent[j]] = back[gh->color[j] - 1];
    if (!verify_coloring(g, full)) return Trial::violation("improper-assembly");
    return Trial::success(std::move(full));
}

}  // namespace gemdetail

// Decide 4-colorability of a graph whose gem partition verified cleanly and
// whose z0 is already gone.  When x has at least two vertices the anchors
// plus x form the precolored set and everything else is a 2-list instance;
// a singleton x drops the dominating anchor from the set and dispatches on
// how many colors the four path anchors received.
inline Outcome color_with_gem(const Graph& g, const GemPartition& p, DecideStats* stats = nullptr) {
    using gemdetail::Trial;
    if (!p.z0.empty()) throw std::invalid_argument("color_with_gem: z0 must be peeled first");
    if (p.x.empty()) return Outcome::violation("x-nonempty");
    if (!is_clique(g, p.x)) return Outcome::violation("x-not-clique");
    if (p.x.count() > 3) return Outcome::violation("x-too-large");  // x plus one path end would be a K5

    if (p.x.count() >= 2) {
        VertexSet pset = p.x;
        for (int i = 0; i < 5; ++i) pset.add(p.anchor[i]);
        Trial t = gemdetail::enumerate_precolorings(g, pset.to_vector(), [&](const std::vector<int>& pre) {
            if (stats) ++stats->precolorings;
            return gemdetail::finish_two_list(g, pre, stats);
        });
        return gemdetail::trial_outcome(std::move(t));
    }

    const int x0 = p.x.first();
    std::vector<int> pvec = {p.anchor[0], p.anchor[1], p.anchor[2], p.anchor[3], x0};
    std::sort(pvec.begin(), pvec.end());

    Trial t = gemdetail::enumerate_precolorings(g, pvec, [&](const std::vector<int>& pre) -> Trial {
        ColorMask used4 = 0;
        for (int i = 0; i < 4; ++i) used4 = ColorMask(used4 | color_bit(pre[p.anchor[i]]));
        const int k4 = list_size(used4);
        if (k4 == 4) return Trial::fail();  // nothing left for v[4]
        if (k4 == 3) {
            int c5 = lowest_color(ColorMask(kFourColors & ~used4));
            return gemdetail::single_forced(g, p, pre, c5, stats);
        }

        // k4 == 2: the path anchors alternate two colors
        std::pair<int, int> edge{-1, -1};
        for (int i = 0; i < 4 && edge.first < 0; ++i) {
            for (int u : p.v[i]) {
                int partner = (g.neighbors(u) & p.v[i]).next(u + 1);
                if (partner >= 0) {
                    edge = {u, partner};
                    break;
                }
            }
        }
        if (edge.first >= 0) {
            // the edge joins the precolored set and pins v[4] to one color
            std::vector<int> pre2 = pre;
            for (int ca = 1; ca <= 4; ++ca) {
                bool oka = true;
                for (int u : g.neighbors(edge.first))
                    if (pre2[u] == ca) oka = false;
                if (!oka) continue;
                pre2[edge.first] = ca;
                for (int cb = 1; cb <= 4; ++cb) {
                    if (cb == ca) continue;
                    bool okb = true;
                    for (int u : g.neighbors(edge.second))
                        if (pre2[u] == cb) okb = false;
                    if (!okb) continue;
                    ColorMask remaining =
                        ColorMask(kFourColors & ~used4 & ~color_bit(ca) & ~color_bit(cb));
                    if (list_size(remaining) != 1) continue;
                    pre2[edge.second] = cb;
                    Trial sub = gemdetail::single_forced(g, p, pre2, lowest_color(remaining), stats);
                    if (sub.kind != Trial::Fail) return sub;
                    pre2[edge.second] = 0;
                }
                pre2[edge.first] = 0;
            }
            return Trial::fail();
        }
        return gemdetail::case_two_stable(g, p, pre, stats);
    });
    return gemdetail::trial_outcome(std::move(t));
}

// Peel z0, decide the rest through the supplied full decision procedure, and
// extend a positive answer back over z0.  The x-components are first recolored
// onto nested prefixes of the color set of a largest one; each z0-component is
// then a clique seeing only x-components no larger than its largest neighbor,
// so the colors missing from that neighbor suffice.
inline Outcome peel_and_extend(const Graph& g, const GemPartition& p,
                               const std::function<Outcome(const Graph&)>& recurse,
                               DecideStats* stats = nullptr) {
    if (p.z0.empty()) return color_with_gem(g, p, stats);

    InducedSubgraph sub = induced(g, g.vertices() - p.z0);
    Outcome inner = recurse(sub.graph);
    if (inner.status == Status::OutOfClass) return Outcome::violation("peeled-graph-left-class");
    if (inner.status != Status::FourColorable) return inner;

    Coloring full{4, std::vector<int>(g.order(), 0)};
    for (int j = 0; j < sub.graph.order(); ++j) full.color[sub.to_parent[j]] = inner.coloring->color[j];

    // nested canonical colors on the x-components
    std::vector<VertexSet> xcomps = components_in(g, p.x);
    if (xcomps.empty()) return Outcome::violation("x-nonempty");
    std::size_t largest = 0;
    for (std::size_t i = 1; i < xcomps.size(); ++i)
        if (xcomps[i].count() > xcomps[largest].count()) largest = i;
    std::vector<int> star_colors;
    for (int u : xcomps[largest]) star_colors.push_back(full.color[u]);
    std::sort(star_colors.begin(), star_colors.end());
    if ((int)star_colors.size() != xcomps[largest].count() ||
        std::adjacent_find(star_colors.begin(), star_colors.end()) != star_colors.end())
        return Outcome::violation("x-component-colors");
    for (const VertexSet& comp : xcomps) {
        int t = 0;
        for (int u : comp) full.color[u] = star_colors[t++];
    }

    for (const VertexSet& ucomp : components_in(g, p.z0)) {
        // components on both sides are homogeneous cliques, so one probe settles adjacency
        const VertexSet* best = nullptr;
        for (const VertexSet& ycomp : xcomps) {
            if (!g.adjacent(ucomp.first(), ycomp.first())) continue;
            if (!best || ycomp.count() > best->count()) best = &ycomp;
        }
        if (!best) return Outcome::violation("z0-without-x-neighbor");
        ColorMask taken = 0;
        for (int y : *best) taken = ColorMask(taken | color_bit(full.color[y]));
        std::vector<int> avail;
        for (int c = 1; c <= 4; ++c)
            if (!(taken & color_bit(c))) avail.push_back(c);
        if (ucomp.count() > (int)avail.size()) return Outcome::violation("z0-overflow");
        int t = 0;
        for (int u : ucomp) full.color[u] = avail[t++];
    }

    if (!verify_coloring(g, full)) return Outcome::violation("improper-extension");
    Outcome out = Outcome::colorable(std::move(full));
    out.stats = inner.stats;
    return out;
}

}  // namespace p6bull
