#pragma once

#include <optional>
#include <stdexcept>

#include "p6bull/graph.hpp"
#include "p6bull/listcolor.hpp"
#include "p6bull/modular.hpp"
#include "p6bull/patterns.hpp"

namespace p6bull {

enum class GemFreeRoute { Perfect, ContainsC5 };

struct GemFreeVerdict {
    GemFreeRoute route = GemFreeRoute::Perfect;
    std::optional<Coloring> coloring;
};

namespace gemfree_detail {

// Unchecked core, for callers that already established (P6, bull, gem)-freeness.
inline GemFreeVerdict run(const Graph& g, int k) {
    GemFreeVerdict verdict;
    verdict.route =
        find_induced(g, pattern(PatternKind::C5)) ? GemFreeRoute::ContainsC5 : GemFreeRoute::Perfect;
    verdict.coloring = exact_k_color(g, k);
    return verdict;
}

}  // namespace gemfree_detail

// k-colorability of a (P6, bull, gem)-free graph.  Without an induced C5 the
// graph has no odd hole (P6-freeness kills the longer ones) and no odd
// antihole (gem-freeness kills antiholes of length >= 7), so it is perfect;
// that case and the C5-containing case both go to the exact oracle here, and
// the route tag records which structural situation applied.
inline GemFreeVerdict decide_gemfree(const Graph& g, int k) {
    if (class_witness(g)) throw std::invalid_argument("decide_gemfree: graph contains a P6 or a bull");
    if (find_induced(g, pattern(PatternKind::Gem))) throw std::invalid_argument("decide_gemfree: graph contains a gem");
    return gemfree_detail::run(g, k);
}

// Falsification probe for the structural fact the C5 route leans on: a prime
// (P6, bull, gem)-free graph containing a C5 is expected to be triangle-free.
// Preconditions are enforced; the caller feeds hypothesis-satisfying graphs
// and a false return is a reportable discrepancy, never ignored.
inline bool triangle_free_probe(const Graph& g) {
    if (class_witness(g)) throw std::invalid_argument("triangle_free_probe: graph contains a P6 or a bull");
    if (find_induced(g, pattern(PatternKind::Gem)))
        throw std::invalid_argument("triangle_free_probe: graph contains a gem");
    if (!find_induced(g, pattern(PatternKind::C5)))
        throw std::invalid_argument("triangle_free_probe: graph contains no C5");
    if (!is_prime(g)) throw std::invalid_argument("triangle_free_probe: graph is not prime");
    return !find_induced(g, pattern(PatternKind::K3)).has_value();
}

}  // namespace p6bull
