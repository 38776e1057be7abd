// ctsat: clause-tree CNF-SAT workbench.
//
// Subcommands: solve, bench, verify, bounds, gen, trace. Solve-style
// commands follow the usual SAT exit convention: 10 = satisfiable,
// 20 = unsatisfiable, 1 = usage/parse error, 2 = resource limit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ctsat/bounds.hpp"
#include "ctsat/differential.hpp"
#include "ctsat/generators.hpp"
#include "ctsat/io.hpp"
#include "ctsat/oracle.hpp"
#include "ctsat/solver.hpp"
#include "ctsat/stats.hpp"

namespace {

constexpr int exit_sat = 10;
constexpr int exit_unsat = 20;
constexpr int exit_usage = 1;
constexpr int exit_resource = 2;

using namespace ctsat;

std::optional<std::uint64_t> resolve_node_limit(std::int64_t flag_value) {
    // precedence: --node-limit flag, CTSAT_NODE_LIMIT env, built-in default;
    // 0 means unlimited
    std::int64_t raw = flag_value;
    if (raw < 0) {
        if (const char* env = std::getenv("CTSAT_NODE_LIMIT"))
            raw = std::strtoll(env, nullptr, 10);
    }
    if (raw < 0) return default_node_limit;
    if (raw == 0) return std::nullopt;
    return static_cast<std::uint64_t>(raw);
}

void print_verdict(const Verdict& v) {
    std::cout << "c procedure " << v.procedure << '\n';
    if (v.sat() && v.witness) {
        std::cout << "c witness";
        for (const auto& [var, val] : v.witness->values())
            std::cout << " x" << var << '=' << (val ? "true" : "false");
        std::cout << '\n';
    }
    std::cout << "s " << to_string(v.result) << '\n';
    if (v.sat() && v.witness) {
        std::cout << "v";
        for (const auto& [var, val] : v.witness->values())
            std::cout << ' ' << (val ? var : -var);
        std::cout << " 0\n";
    }
}

int run_solve(const std::string& path, const std::string& algo,
              PruneSchedule schedule, EmptyFormulaPolicy policy,
              const std::string& stats_path, std::int64_t node_limit_flag) {
    Formula f = load_formula_file(path);
    if (f.duplicates_removed() > 0)
        std::cout << "c note: collapsed " << f.duplicates_removed()
                  << " duplicate clause(s)\n";
    Verdict v;
    if (algo == "clause-tree") {
        SolveConfig cfg;
        cfg.schedule = schedule;
        cfg.empty_formula = policy;
        cfg.node_limit = resolve_node_limit(node_limit_flag);
        v = tree_solve(f, cfg);
    } else if (algo == "truth-table") {
        v = truth_table_sat(f);
    } else {
        v = full_clause_sat(f);
    }
    print_verdict(v);
    if (!stats_path.empty()) write_text_file(stats_path, verdict_kv(v));
    return v.sat() ? exit_sat : exit_unsat;
}

int run_bench(int n_min, int n_max, PruneSchedule schedule,
              const std::string& csv_path, std::int64_t node_limit_flag) {
    std::string csv = bench_csv_header();
    std::optional<std::uint64_t> prev_visits;
    for (int n = n_min; n <= n_max; ++n) {
        SolveConfig cfg;
        cfg.schedule = schedule;
        cfg.node_limit = resolve_node_limit(node_limit_flag);
        Formula f = gen_blowup(n);
        auto start = std::chrono::steady_clock::now();
        Verdict v = tree_solve(f, cfg);
        auto elapsed = std::chrono::steady_clock::now() - start;
        std::uint64_t ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)
                .count();
        std::optional<double> ratio;
        if (prev_visits && *prev_visits > 0)
            ratio = static_cast<double>(v.counters.prune_pointer_visits) /
                    static_cast<double>(*prev_visits);
        csv += bench_csv_row(n, v, ns, ratio);
        prev_visits = v.counters.prune_pointer_visits;
    }
    if (csv_path.empty() || csv_path == "-") {
        std::cout << csv;
    } else {
        write_text_file(csv_path, csv);
    }
    return 0;
}

int run_verify(const std::string& mode, int nvars, int samples,
               std::uint64_t seed, const std::string& report_path,
               bool inject_fault) {
    std::string report;
    std::uint64_t bad = 0;
    auto render = [&](const char* label, const DifferentialSummary& s) {
        report += std::string(label) + " checked=" + std::to_string(s.checked) +
                  " disagreements=" + std::to_string(s.disagreements.size()) +
                  "\n";
        for (const Disagreement& d : s.disagreements) {
            report += "disagreement: " + d.detail + "\n";
            report += "formula:\n" + d.formula;
        }
        bad += s.disagreements.size();
    };
    if (mode == "exhaustive" || mode == "both")
        render("exhaustive", run_exhaustive_suite(3, 4, inject_fault));
    if (mode == "random" || mode == "both")
        render("random", run_random_suite(nvars, samples, seed, inject_fault));
    report += std::string("result=") +
              (bad == 0 ? "agreement" : "DISAGREEMENT") + "\n";
    std::cout << report;
    if (!report_path.empty()) write_text_file(report_path, report);
    return bad == 0 ? 0 : exit_usage;
}

int run_bounds(const std::string& path, const std::string& csv_path) {
    Formula f = load_formula_file(path);
    BoundsReport r = apply_bounds(f);
    std::cout << bounds_kv(r);
    if (!csv_path.empty())
        write_text_file(csv_path,
                        bounds_csv_header() + bounds_csv_row(r, f.size()));
    return 0;
}

int run_gen(const std::string& family, int n, bool random_mode,
            const RandomFormulaSpec& random_spec, bool exhaustive_mode,
            int max_clauses, const std::string& out,
            const std::string& out_dir) {
    if (exhaustive_mode) {
        if (out_dir.empty())
            throw std::invalid_argument("gen --exhaustive needs --out-dir");
        std::filesystem::create_directories(out_dir);
        std::uint64_t index = 0;
        for_each_exhaustive_formula(n, max_clauses, [&](const Formula& f) {
            char name[32];
            std::snprintf(name, sizeof(name), "formula_%06llu.scnf",
                          static_cast<unsigned long long>(index++));
            write_formula_file(std::filesystem::path(out_dir) / name, f);
        });
        std::cout << "wrote " << index << " formulas to " << out_dir << '\n';
        return 0;
    }
    Formula f;
    if (random_mode) {
        f = gen_random(random_spec);
    } else if (family == "blowup") {
        f = gen_blowup(n);
        if (!blowup_family_member(n))
            std::cout << "c note: n=" << n
                      << " is outside the blowup family (needs n > 1)\n";
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    if (out.empty()) {
        std::cout << emit_native(f);
    } else {
        write_formula_file(out, f);
    }
    return 0;
}

int run_trace(const std::string& path, PruneSchedule schedule,
              const std::string& out_dir, std::int64_t node_limit_flag) {
    Formula f = load_formula_file(path);
    SolveConfig cfg;
    cfg.schedule = schedule;
    cfg.node_limit = resolve_node_limit(node_limit_flag);
    auto [verdict, frames] = solve_with_trace(f, cfg);
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const char* event =
            frames[i].event == SolveEvent::clause_inserted ? "insert" : "prune";
        char name[48];
        std::snprintf(name, sizeof(name), "frame_%03zu_%s.dot", i + 1, event);
        write_text_file(std::filesystem::path(out_dir) / name, frames[i].dot);
    }
    std::cout << "c wrote " << frames.size() << " frames to " << out_dir
              << '\n';
    print_verdict(verdict);
    return verdict.sat() ? exit_sat : exit_unsat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clause-tree CNF-SAT workbench"};
    app.require_subcommand(1);

    std::map<std::string, PruneSchedule> schedule_names{
        {"per-clause", PruneSchedule::per_clause},
        {"post-construction", PruneSchedule::post_construction}};
    std::map<std::string, EmptyFormulaPolicy> policy_names{
        {"accept", EmptyFormulaPolicy::accept},
        {"reject", EmptyFormulaPolicy::reject}};

    auto* solve = app.add_subcommand("solve", "decide one formula file");
    std::string solve_path, solve_algo = "clause-tree", solve_stats;
    PruneSchedule solve_schedule = PruneSchedule::per_clause;
    EmptyFormulaPolicy solve_policy = EmptyFormulaPolicy::accept;
    std::int64_t solve_node_limit = -1;
    solve->add_option("path", solve_path, ".cnf (DIMACS) or .scnf (native) file")
        ->required();
    solve
        ->add_option("--algo", solve_algo,
                     "decision procedure: clause-tree, truth-table, full-clause")
        ->check(CLI::IsMember({"clause-tree", "truth-table", "full-clause"}));
    solve->add_option("--schedule", solve_schedule, "prune schedule")
        ->transform(CLI::CheckedTransformer(schedule_names));
    solve
        ->add_option("--empty-policy", solve_policy,
                     "verdict for the empty formula")
        ->transform(CLI::CheckedTransformer(policy_names));
    solve->add_option("--stats", solve_stats, "write key=value counters here");
    solve->add_option("--node-limit", solve_node_limit,
                      "live node guard (0 = unlimited)");

    auto* bench = app.add_subcommand("bench", "blowup-family benchmark CSV");
    std::string bench_family = "blowup", bench_csv;
    int bench_min = 2, bench_max = 18;
    PruneSchedule bench_schedule = PruneSchedule::per_clause;
    std::int64_t bench_node_limit = -1;
    bench->add_option("--family", bench_family, "formula family")
        ->check(CLI::IsMember({"blowup"}));
    bench->add_option("--n-min", bench_min, "smallest n")
        ->check(CLI::Range(1, 22));
    bench->add_option("--n-max", bench_max, "largest n")
        ->check(CLI::Range(1, 22));
    bench->add_option("--schedule", bench_schedule, "prune schedule")
        ->transform(CLI::CheckedTransformer(schedule_names));
    bench->add_option("--csv", bench_csv, "output path ('-' for stdout)");
    bench->add_option("--node-limit", bench_node_limit,
                      "live node guard (0 = unlimited)");

    auto* verify = app.add_subcommand(
        "verify", "differential run: clause-tree vs the brute-force deciders");
    std::string verify_mode = "both", verify_report;
    int verify_nvars = 4, verify_samples = 10000;
    std::uint64_t verify_seed = 1;
    bool verify_fault = false;
    verify->add_option("--mode", verify_mode, "exhaustive, random, or both")
        ->check(CLI::IsMember({"exhaustive", "random", "both"}));
    verify->add_option("--nvars", verify_nvars, "variables for random mode")
        ->check(CLI::Range(1, 4));
    verify->add_option("--samples", verify_samples, "random sample count");
    verify->add_option("--seed", verify_seed, "random suite seed");
    verify->add_option("--report", verify_report, "write the report here");
    verify->add_flag("--inject-fault", verify_fault)->group("");  // self-test

    auto* bounds = app.add_subcommand("bounds", "pre-filter bound report");
    std::string bounds_path, bounds_csv;
    bounds->add_option("path", bounds_path, "formula file")->required();
    bounds->add_option("--csv", bounds_csv, "also write a CSV row here");

    auto* gen = app.add_subcommand("gen", "write generated formulas");
    std::string gen_family = "blowup", gen_out, gen_out_dir;
    int gen_n = 2, gen_max_clauses = 4;
    bool gen_random_mode = false, gen_exhaustive_mode = false;
    RandomFormulaSpec gen_spec;
    gen->add_option("--family", gen_family, "named family")
        ->check(CLI::IsMember({"blowup"}));
    gen->add_option("--n", gen_n, "family size / exhaustive variable count");
    gen->add_flag("--random", gen_random_mode, "random formula mode");
    gen->add_option("--nvars", gen_spec.nvars, "random: variable count");
    gen->add_option("--nclauses", gen_spec.nclauses, "random: clause count");
    gen->add_option("--width-min", gen_spec.width_min,
                    "random: min clause width");
    gen->add_option("--width-max", gen_spec.width_max,
                    "random: max clause width");
    gen->add_option("--seed", gen_spec.seed, "random: seed");
    gen->add_flag("--allow-tautologies", gen_spec.allow_tautologies,
                  "random: draw literals with replacement");
    gen->add_flag("--exhaustive", gen_exhaustive_mode,
                  "every small formula, one file each");
    gen->add_option("--max-clauses", gen_max_clauses, "exhaustive: clause cap");
    gen->add_option("-o,--out", gen_out, "output file (.cnf or .scnf)");
    gen->add_option("--out-dir", gen_out_dir, "exhaustive: output directory");

    auto* trace = app.add_subcommand("trace", "DOT frame per solver event");
    std::string trace_path, trace_out_dir = "trace";
    PruneSchedule trace_schedule = PruneSchedule::per_clause;
    std::int64_t trace_node_limit = -1;
    trace->add_option("path", trace_path, "formula file")->required();
    trace->add_option("--schedule", trace_schedule, "prune schedule")
        ->transform(CLI::CheckedTransformer(schedule_names));
    trace->add_option("--out-dir", trace_out_dir, "frame directory");
    trace->add_option("--node-limit", trace_node_limit,
                      "live node guard (0 = unlimited)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;  // help/version exit cleanly
    }

    try {
        if (solve->parsed())
            return run_solve(solve_path, solve_algo, solve_schedule,
                             solve_policy, solve_stats, solve_node_limit);
        if (bench->parsed()) {
            if (bench_min > bench_max)
                throw std::invalid_argument("--n-min must be <= --n-max");
            return run_bench(bench_min, bench_max, bench_schedule, bench_csv,
                             bench_node_limit);
        }
        if (verify->parsed())
            return run_verify(verify_mode, verify_nvars, verify_samples,
                              verify_seed, verify_report, verify_fault);
        if (bounds->parsed()) return run_bounds(bounds_path, bounds_csv);
        if (gen->parsed())
            return run_gen(gen_family, gen_n, gen_random_mode, gen_spec,
                           gen_exhaustive_mode, gen_max_clauses, gen_out,
                           gen_out_dir);
        if (trace->parsed())
            return run_trace(trace_path, trace_schedule, trace_out_dir,
                             trace_node_limit);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
