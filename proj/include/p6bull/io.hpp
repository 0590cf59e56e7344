#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "p6bull/graph.hpp"
#include "p6bull/outcome.hpp"

namespace p6bull::io {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct ParseResult {
    Graph graph;
    std::vector<std::string> warnings;
};

// DIMACS coloring format: "c" comment lines, one "p edge <n> <m>" header,
// then "e <u> <v>" lines with 1-based endpoints.  Duplicate edges collapse;
// a wrong edge count in the header is tolerated with a warning.
inline ParseResult parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0;
    long declared_m = 0, listed = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || kind != "edge")
                throw ParseError(lineno, "malformed problem line, expected \"p edge <n> <m>\"");
            if (n < 0 || declared_m < 0) throw ParseError(lineno, "negative size in problem line");
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge before the problem line");
            long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "endpoint outside 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back((int)u - 1, (int)v - 1);
            ++listed;
            continue;
        }
        throw ParseError(lineno, "unrecognized line type \"" + tag + "\"");
    }
    if (!have_header) throw ParseError(lineno, "missing problem line");

    ParseResult out{Graph(n, edges), {}};
    if (listed != declared_m)
        out.warnings.push_back("header declares " + std::to_string(declared_m) + " edges but " +
                               std::to_string(listed) + " were listed");
    else if (out.graph.edge_count() != declared_m)
        out.warnings.push_back("duplicate edges collapsed: " + std::to_string(declared_m) + " -> " +
                               std::to_string(out.graph.edge_count()));
    return out;
}

inline std::string emit_dimacs(const Graph& g, const std::string& comment = "") {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.order() << ' ' << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << "\n";
    return out.str();
}

// Coloring files: one "v <index> <color>" line per vertex, both 1-based.
// Every vertex must appear exactly once.
inline Coloring parse_coloring(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Coloring c{4, std::vector<int>(n, 0)};
    std::vector<char> seen(n, 0);
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag != "v") throw ParseError(lineno, "unrecognized line type \"" + tag + "\"");
        long v, col;
        if (!(ls >> v >> col)) throw ParseError(lineno, "malformed vertex line");
        if (v < 1 || v > n) throw ParseError(lineno, "vertex outside 1.." + std::to_string(n));
        if (seen[v - 1]) throw ParseError(lineno, "vertex " + std::to_string(v) + " colored twice");
        seen[v - 1] = 1;
        c.color[v - 1] = (int)col;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw ParseError(lineno, "vertex " + std::to_string(v + 1) + " is missing a color");
    return c;
}

inline std::string emit_coloring(const Coloring& c) {
    std::ostringstream out;
    for (std::size_t v = 0; v < c.color.size(); ++v) out << "v " << v + 1 << ' ' << c.color[v] << "\n";
    return out.str();
}

enum class ReportFormat { Text, Json };

inline nlohmann::json report_json(const Graph& g, const Outcome& out, bool forced = false) {
    nlohmann::json j;
    j["status"] = status_name(out.status);
    if (out.coloring) j["coloring"] = out.coloring->color;
    if (out.witness) {
        nlohmann::json w = nlohmann::json::array();
        for (int v : out.witness->map) w.push_back(v + 1);
        j["witness"] = w;
    }
    if (!out.violations.empty()) j["violations"] = out.violations;
    nlohmann::json stats;
    stats["n"] = g.order();
    stats["m"] = g.edge_count();
    stats["route"] = out.stats.route;
    stats["oracle_calls"] = out.stats.oracle_calls;
    stats["twosat_calls"] = out.stats.twosat_calls;
    stats["precolorings"] = out.stats.precolorings;
    stats["partitions_built"] = out.stats.partitions_built;
    stats["partition_violations"] = out.stats.partition_violations;
    stats["max_depth"] = out.stats.max_depth;
    if (out.witness) stats["witness_pattern"] = std::string(pattern(out.witness->kind).name);
    if (forced) stats["forced"] = true;
    j["stats"] = stats;
    return j;
}

inline std::string emit_report(const Graph& g, const Outcome& out, ReportFormat format,
                               bool forced = false) {
    if (format == ReportFormat::Json) return report_json(g, out, forced).dump();
    std::ostringstream t;
    t << "status: " << status_name(out.status) << "\n";
    t << "graph: " << g.order() << " vertices, " << g.edge_count() << " edges\n";
    if (forced) t << "note: class check overridden; outcome is best-effort\n";
    if (out.coloring) {
        t << "coloring:";
        for (std::size_t v = 0; v < out.coloring->color.size(); ++v) {
            t << ' ' << v + 1 << ':' << out.coloring->color[v];
        }
        t << "\n";
    }
    if (out.witness) {
        t << "witness: " << pattern(out.witness->kind).name << " on vertices";
        for (int v : out.witness->map) t << ' ' << v + 1;
        t << "\n";
    }
    if (!out.violations.empty()) {
        t << "violated:";
        for (const auto& id : out.violations) t << ' ' << id;
        t << "\n";
    }
    t << "route: " << (out.stats.route.empty() ? "-" : out.stats.route) << "\n";
    return t.str();
}

inline int exit_code(Status s) {
    switch (s) {
        case Status::FourColorable: return 0;
        case Status::NotFourColorable: return 1;
        case Status::OutOfClass: return 2;
        case Status::InvariantViolation: return 3;
    }
    return 3;
}

}  // namespace p6bull::io
