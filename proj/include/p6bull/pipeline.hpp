#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "p6bull/gemcase.hpp"
#include "p6bull/gemfree.hpp"
#include "p6bull/graph.hpp"
#include "p6bull/listcolor.hpp"
#include "p6bull/modular.hpp"
#include "p6bull/outcome.hpp"
#include "p6bull/patterns.hpp"

namespace p6bull {

struct DecideOptions {
    // Keep going when the class check finds a witness.  The route taken is
    // then outside the supported class and the outcome is best-effort.
    bool force = false;
};

struct Trace {
    std::vector<std::string> lines;
};

namespace pipedetail {

struct Ctx {
    DecideStats stats;
    Trace* trace = nullptr;
    bool force = false;
    int depth = 0;
};

inline void tr(Ctx& ctx, const std::string& line) {
    if (ctx.trace) ctx.trace->lines.push_back(std::string(2 * ctx.depth, ' ') + line);
}

inline void route(Ctx& ctx, const std::string& name) {
    if (ctx.stats.route.empty()) ctx.stats.route = name;
}

inline std::string embedding_brief(const Embedding& e) {
    std::string s = std::string(pattern(e.kind).name) + " at (";
    for (std::size_t i = 0; i < e.map.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.map[i]);
    }
    return s + ")";
}

inline Outcome decide_impl(const Graph& g, Ctx& ctx);

// Steps on a connected, co-connected, quasi-prime graph: reject K5 and the
// double wheel, route any F0..F6 occurrence to the magnet procedure (F0 must
// be ruled out before F1..F6 may serve as magnets), then the gem and gem-free
// routes.
inline Outcome decide_core(const Graph& g, Ctx& ctx) {
    if (g.order() >= 5 && find_induced(g, pattern(PatternKind::K5))) {
        route(ctx, "k5");
        tr(ctx, "contains K5: not 4-colorable");
        return Outcome::infeasible();
    }
    if (g.order() >= 7 && find_induced(g, pattern(PatternKind::DoubleWheel))) {
        route(ctx, "double-wheel");
        tr(ctx, "contains a double wheel: not 4-colorable");
        return Outcome::infeasible();
    }

    static constexpr PatternKind magnets[] = {PatternKind::F0, PatternKind::F1, PatternKind::F2,
                                              PatternKind::F3, PatternKind::F4, PatternKind::F5,
                                              PatternKind::F6};
    for (PatternKind kind : magnets) {
        const Pattern& pat = pattern(kind);
        if (pat.order > g.order()) continue;
        auto emb = find_induced(g, pat);
        if (!emb) continue;
        VertexSet fset(g.order());
        for (int v : emb->map) fset.add(v);
        if (!is_magnet(g, fset))
            return Outcome::violation(std::string("magnet-expected-") + std::string(pat.name));
        route(ctx, std::string("magnet-") + std::string(pat.name));
        tr(ctx, "magnet route: " + embedding_brief(*emb));
        long trials = 0;
        auto col = magnet_color(g, fset, &trials);
        ctx.stats.precolorings += trials;
        ctx.stats.twosat_calls += trials;
        if (!col) return Outcome::infeasible();
        return Outcome::colorable(std::move(*col));
    }

    if (auto gem = find_induced(g, pattern(PatternKind::Gem))) {
        VertexSet gset(g.order());
        for (int v : gem->map) gset.add(v);
        if (is_magnet(g, gset)) {
            // when the anchoring gem is itself a magnet, precoloring it
            // settles the graph; the partition (in particular a non-empty x)
            // is only promised for non-magnet gems
            route(ctx, "magnet-gem");
            tr(ctx, "anchoring gem is a magnet: " + embedding_brief(*gem));
            long trials = 0;
            auto col = magnet_color(g, gset, &trials);
            ctx.stats.precolorings += trials;
            ctx.stats.twosat_calls += trials;
            if (!col) return Outcome::infeasible();
            return Outcome::colorable(std::move(*col));
        }
        route(ctx, "gem");
        tr(ctx, "gem route: " + embedding_brief(*gem));
        GemPartition part = build_partition(g, *gem);
        ++ctx.stats.partitions_built;
        auto bad = verify_partition(g, part);
        if (!bad.empty()) {
            ++ctx.stats.partition_violations;
            tr(ctx, "partition checks failed");
            return Outcome::violation(std::move(bad));
        }
        tr(ctx, "partition: |x|=" + std::to_string(part.x.count()) +
                    " |w|=" + std::to_string(part.w.count()) + " |z0|=" + std::to_string(part.z0.count()) +
                    " |z1|=" + std::to_string(part.z1.count()));
        auto recurse = [&ctx](const Graph& sub) {
            Ctx child{DecideStats{}, ctx.trace, ctx.force, ctx.depth + 1};
            child.stats = ctx.stats;
            Outcome out = decide_impl(sub, child);
            ctx.stats = child.stats;
            return out;
        };
        if (!part.z0.empty()) tr(ctx, "peeling z0 (" + std::to_string(part.z0.count()) + " vertices)");
        return peel_and_extend(g, part, recurse, &ctx.stats);
    }

    route(ctx, "gem-free");
    ++ctx.stats.oracle_calls;
    // class membership and gem absence were both established on the way here
    GemFreeVerdict verdict = gemfree_detail::run(g, 4);
    tr(ctx, verdict.route == GemFreeRoute::ContainsC5 ? "gem-free route: contains C5"
                                                      : "gem-free route: perfect");
    if (!verdict.coloring) {
        if (verdict.route == GemFreeRoute::Perfect) {
            // K5 was excluded above, so a perfect graph here has clique number
            // at most four and must be 4-colorable
            return Outcome::violation("perfect-route-infeasible");
        }
        return Outcome::infeasible();
    }
    return Outcome::colorable(std::move(*verdict.coloring));
}

inline Outcome decide_steps(const Graph& g, Ctx& ctx) {
    ctx.stats.max_depth = std::max(ctx.stats.max_depth, ctx.depth);
    const int n = g.order();

    // 1. class membership (hereditary, so recursion re-passes it)
    if (auto witness = class_witness(g)) {
        tr(ctx, "class witness: " + embedding_brief(*witness));
        if (!ctx.force) {
            route(ctx, "out-of-class");
            return Outcome::out_of_class(std::move(*witness));
        }
        tr(ctx, "forced: continuing outside the class");
    }

    if (n <= 4) {
        route(ctx, "small");
        tr(ctx, "at most four vertices: direct coloring");
        ++ctx.stats.oracle_calls;
        auto col = exact_k_color(g, 4);
        return Outcome::colorable(std::move(*col));  // any graph on <= 4 vertices
    }

    // 2. components are independent
    auto comps = components(g);
    if (comps.size() > 1) {
        route(ctx, "components");
        tr(ctx, "splitting into " + std::to_string(comps.size()) + " components");
        Coloring merged{4, std::vector<int>(n, 0)};
        for (const VertexSet& comp : comps) {
            InducedSubgraph sub = induced(g, comp);
            Ctx child{std::move(ctx.stats), ctx.trace, ctx.force, ctx.depth + 1};
            Outcome out = decide_impl(sub.graph, child);
            ctx.stats = std::move(child.stats);
            if (out.status != Status::FourColorable) return out;
            for (int j = 0; j < sub.graph.order(); ++j)
                merged.color[sub.to_parent[j]] = out.coloring->color[j];
        }
        if (!verify_coloring(g, merged)) return Outcome::violation("component-merge");
        return Outcome::colorable(std::move(merged));
    }

    // 3. a disconnected complement splits into co-components whose chromatic
    //    numbers add up; each side needs its own disjoint palette
    auto cocomps = components(complement(g));
    if (cocomps.size() > 1) {
        route(ctx, "co-components");
        tr(ctx, "splitting into " + std::to_string(cocomps.size()) + " co-components");
        Coloring merged{4, std::vector<int>(n, 0)};
        int used = 0;
        for (const VertexSet& comp : cocomps) {
            InducedSubgraph sub = induced(g, comp);
            ++ctx.stats.oracle_calls;
            SmallChromatic sc = chromatic_small(sub.graph);
            used += sc.chi;
            if (used > 4) {
                tr(ctx, "co-component chromatic numbers exceed four");
                return Outcome::infeasible();
            }
            int offset = used - sc.chi;
            for (int j = 0; j < sub.graph.order(); ++j)
                merged.color[sub.to_parent[j]] = sc.coloring->color[j] + offset;
        }
        if (!verify_coloring(g, merged)) return Outcome::violation("co-component-merge");
        return Outcome::colorable(std::move(merged));
    }

    // 4. shrink non-clique modules to cliques of their chromatic size
    auto reduction = quasi_prime_reduce(g);
    if (!reduction) {
        route(ctx, "module-chromatic");
        tr(ctx, "a module needs four colors: not 4-colorable");
        return Outcome::infeasible();
    }
    const bool reduced = !reduction->layers.empty();
    if (reduced) {
        tr(ctx, "module reduction: " + std::to_string(n) + " -> " +
                    std::to_string(reduction->reduced.order()) + " vertices");
        if (!is_quasi_prime(reduction->reduced)) return Outcome::violation("reduction-not-quasi-prime");
        if (!ctx.force && class_witness(reduction->reduced))
            return Outcome::violation("reduction-left-class");
    }

    Outcome out = decide_core(reduction->reduced, ctx);
    if (out.status != Status::FourColorable) return out;
    if (reduced) {
        Coloring lifted = lift_coloring(*out.coloring, *reduction);
        if (!verify_coloring(g, lifted)) return Outcome::violation("module-lift");
        out.coloring = std::move(lifted);
    }
    if (!verify_coloring(g, *out.coloring)) return Outcome::violation("final-verify");
    return out;
}

inline Outcome decide_impl(const Graph& g, Ctx& ctx) {
    Outcome out = decide_steps(g, ctx);
    if (ctx.force && out.status == Status::InvariantViolation) {
        // outside the class the structure checks carry no guarantee; fall
        // back to the oracle so a forced run still answers
        tr(ctx, "forced: structure checks failed; deciding by the oracle");
        ++ctx.stats.oracle_calls;
        auto col = exact_k_color(g, 4);
        if (col) return Outcome::colorable(std::move(*col));
        return Outcome::infeasible();
    }
    return out;
}

}  // namespace pipedetail

// Decide whether g admits a proper 4-coloring and produce one when it does.
// Inputs outside the (P6, bull)-free class are reported, not guessed at, and
// every FourColorable answer is re-verified before it is returned.
inline Outcome decide4(const Graph& g, DecideOptions opt = {}) {
    pipedetail::Ctx ctx;
    ctx.force = opt.force;
    Outcome out = pipedetail::decide_impl(g, ctx);
    out.stats = ctx.stats;
    if (out.status == Status::FourColorable && !verify_coloring(g, *out.coloring)) {
        Outcome bad = Outcome::violation("final-verify");
        bad.stats = ctx.stats;
        return bad;
    }
    return out;
}

// decide4 plus the ordered log of routing decisions.
inline std::pair<Outcome, Trace> decide4_with_trace(const Graph& g, DecideOptions opt = {}) {
    Trace trace;
    pipedetail::Ctx ctx;
    ctx.force = opt.force;
    ctx.trace = &trace;
    Outcome out = pipedetail::decide_impl(g, ctx);
    out.stats = ctx.stats;
    if (out.status == Status::FourColorable && !verify_coloring(g, *out.coloring)) {
        Outcome bad = Outcome::violation("final-verify");
        bad.stats = ctx.stats;
        out = std::move(bad);
    }
    trace.lines.push_back(std::string("outcome: ") + status_name(out.status));
    return {std::move(out), std::move(trace)};
}

}  // namespace p6bull
