// Command-line front end: decide / verify / gen / difftest / trace over
// DIMACS .col files.  Exit codes: 0 four-colorable (or valid), 1 not
// four-colorable (or invalid coloring), 2 out of class, 3 violation or
// input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "p6bull/difftest.hpp"
#include "p6bull/generate.hpp"
#include "p6bull/graph.hpp"
#include "p6bull/io.hpp"
#include "p6bull/pipeline.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

p6bull::Graph load_graph(const std::string& path) {
    auto parsed = p6bull::io::parse_dimacs(slurp(path));
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return parsed.graph;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"4-colorability of (P6, bull)-free graphs"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path;
    bool json = false, force = false, strict = false;

    auto* decide = app.add_subcommand("decide", "decide 4-colorability of a DIMACS graph");
    decide->add_option("file", graph_path, "input .col file")->required();
    decide->add_flag("--json", json, "machine-readable report");
    auto* strict_flag =
        decide->add_flag("--strict-class", strict, "refuse out-of-class inputs (the default)");
    decide->add_flag("--force", force, "keep going on out-of-class inputs (best effort)")
        ->excludes(strict_flag);

    auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
    verify->add_option("file", graph_path, "input .col file")->required();
    verify->add_option("coloring", coloring_path, "coloring file, one \"v <index> <color>\" per line")
        ->required();

    int gen_n = 10;
    double gen_p = 0.2;
    std::uint64_t gen_seed = 1;
    long gen_count = 1;
    auto* gen = app.add_subcommand("gen", "generate seeded in-class instances as DIMACS");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--count", gen_count, "instances to emit");

    p6bull::difftest::Config cfg;
    auto* diff = app.add_subcommand("difftest", "differential campaign against the exact oracle");
    diff->add_option("--count", cfg.count, "sampled instances");
    diff->add_option("--nmin", cfg.nmin, "smallest order");
    diff->add_option("--nmax", cfg.nmax, "largest order");
    diff->add_option("--pmin", cfg.pmin, "smallest edge probability");
    diff->add_option("--pmax", cfg.pmax, "largest edge probability");
    diff->add_option("--gem-count", cfg.gem_count, "constructive gem-anchored instances");
    diff->add_option("--seed", cfg.seed, "campaign seed");
    diff->add_option("--dump-dir", cfg.dump_dir, "where to persist disagreements");
    diff->add_flag("--json", json, "machine-readable report");

    auto* trace = app.add_subcommand("trace", "decide and print the routing log");
    trace->add_option("file", graph_path, "input .col file")->required();
    trace->add_flag("--json", json, "machine-readable report");
    auto* trace_strict =
        trace->add_flag("--strict-class", strict, "refuse out-of-class inputs (the default)");
    trace->add_flag("--force", force, "keep going on out-of-class inputs (best effort)")
        ->excludes(trace_strict);

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) {
            p6bull::Graph g = load_graph(graph_path);
            p6bull::Outcome out = p6bull::decide4(g, {force});
            std::cout << p6bull::io::emit_report(
                g, out, json ? p6bull::io::ReportFormat::Json : p6bull::io::ReportFormat::Text, force);
            if (json) std::cout << "\n";
            return p6bull::io::exit_code(out.status);
        }
        if (verify->parsed()) {
            p6bull::Graph g = load_graph(graph_path);
            p6bull::Coloring c = p6bull::io::parse_coloring(slurp(coloring_path), g.order());
            bool ok = p6bull::verify_coloring(g, c);
            std::cout << (ok ? "valid 4-coloring\n" : "not a valid 4-coloring\n");
            return ok ? 0 : 1;
        }
        if (gen->parsed()) {
            std::mt19937_64 master(gen_seed);
            long emitted = 0;
            for (long attempt = 0; emitted < gen_count; ++attempt) {
                if (attempt > 10000 * gen_count) {
                    std::cerr << "giving up: the class rejects nearly every draw at these parameters\n";
                    return 3;
                }
                std::uint64_t sub = master();
                if (auto g = p6bull::gen::generate_in_class(gen_n, gen_p, sub)) {
                    std::cout << p6bull::io::emit_dimacs(
                        *g, "gen n=" + std::to_string(gen_n) + " p=" + std::to_string(gen_p) +
                                " seed=" + std::to_string(sub));
                    ++emitted;
                }
            }
            return 0;
        }
        if (diff->parsed()) {
            auto res = p6bull::difftest::run(cfg);
            std::cout << (json ? p6bull::difftest::to_json(res) : p6bull::difftest::to_text(res));
            if (json) std::cout << "\n";
            return res.disagreements == 0 && res.invariant_violations == 0 ? 0 : 3;
        }
        if (trace->parsed()) {
            p6bull::Graph g = load_graph(graph_path);
            auto [out, log] = p6bull::decide4_with_trace(g, {force});
            for (const auto& line : log.lines) std::cout << line << "\n";
            std::cout << p6bull::io::emit_report(
                g, out, json ? p6bull::io::ReportFormat::Json : p6bull::io::ReportFormat::Text, force);
            if (json) std::cout << "\n";
            return p6bull::io::exit_code(out.status);
        }
    } catch (const p6bull::io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
