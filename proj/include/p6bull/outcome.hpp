#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p6bull/graph.hpp"
#include "p6bull/patterns.hpp"

namespace p6bull {

enum class Status { FourColorable, NotFourColorable, OutOfClass, InvariantViolation };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::FourColorable: return "four_colorable";
        case Status::NotFourColorable: return "not_four_colorable";
        case Status::OutOfClass: return "out_of_class";
        case Status::InvariantViolation: return "invariant_violation";
    }
    return "?";
}

struct DecideStats {
    std::string route;            // first routing decision of the top-level call
    long oracle_calls = 0;        // exact coloring oracle invocations
    long twosat_calls = 0;        // 2-list instances solved
    long precolorings = 0;        // precolorings examined (magnet and gem procedures)
    long partitions_built = 0;
    long partition_violations = 0;
    int max_depth = 0;
};

struct Outcome {
    Status status = Status::NotFourColorable;
    std::optional<Coloring> coloring;      // present iff FourColorable
    std::optional<Embedding> witness;      // present iff OutOfClass
    std::vector<std::string> violations;   // present iff InvariantViolation
    DecideStats stats;

    static Outcome colorable(Coloring c) {
        Outcome o;
        o.status = Status::FourColorable;
        o.coloring = std::move(c);
        return o;
    }
    static Outcome infeasible() {
        Outcome o;
        o.status = Status::NotFourColorable;
        return o;
    }
    static Outcome out_of_class(Embedding w) {
        Outcome o;
        o.status = Status::OutOfClass;
        o.witness = std::move(w);
        return o;
    }
    static Outcome violation(std::vector<std::string> ids) {
        Outcome o;
        o.status = Status::InvariantViolation;
        o.violations = std::move(ids);
        return o;
    }
    static Outcome violation(std::string id) { return violation(std::vector<std::string>{std::move(id)}); }
};

}  // namespace p6bull
