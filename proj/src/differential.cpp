#include "ctsat/differential.hpp"

#include "ctsat/generators.hpp"
#include "ctsat/io.hpp"
#include "ctsat/oracle.hpp"
#include "ctsat/solver.hpp"

namespace ctsat {
namespace {

std::optional<std::string> witness_problem(const Formula& f, const Verdict& v) {
    if (!v.sat() || !v.witness) return std::nullopt;
    if (evaluate_formula(f, *v.witness)) return std::nullopt;
    return v.procedure + " witness " + v.witness->str() +
           " does not satisfy the formula";
}

}  // namespace

std::optional<Disagreement> check_formula_agreement(const Formula& f,
                                                    bool inject_fault) {
    SolveConfig per_clause;
    per_clause.schedule = PruneSchedule::per_clause;
    SolveConfig post;
    post.schedule = PruneSchedule::post_construction;

    Verdict tree_pc = tree_solve(f, per_clause);
    if (inject_fault) {
        tree_pc.result = tree_pc.sat() ? SatResult::unsatisfiable
                                       : SatResult::satisfiable;
        tree_pc.witness.reset();
    }
    Verdict tree_post = tree_solve(f, post);
    Verdict table = truth_table_sat(f);
    Verdict cover = full_clause_sat(f);

    auto report = [&](const std::string& detail) {
        return Disagreement{emit_native(f), detail};
    };

    for (const Verdict* v : {&tree_pc, &tree_post, &cover}) {
        if (v->result != table.result)
            return report(v->procedure + " says " + to_string(v->result) +
                          " but truth-table says " + to_string(table.result));
    }
    for (const Verdict* v : {&tree_pc, &tree_post, &table, &cover}) {
        if (auto problem = witness_problem(f, *v)) return report(*problem);
    }
    return std::nullopt;
}

DifferentialSummary run_exhaustive_suite(int nvars, int max_clauses,
                                         bool inject_fault) {
    DifferentialSummary summary;
    for_each_exhaustive_formula(nvars, max_clauses, [&](const Formula& f) {
        ++summary.checked;
        if (auto d = check_formula_agreement(f, inject_fault))
            summary.disagreements.push_back(*d);
    });
    return summary;
}

Formula random_suite_formula(int nvars, std::uint64_t seed, int index) {
    RandomFormulaSpec spec;
    spec.nvars = nvars;
    spec.nclauses = 1 + index % 8;
    spec.width_min = 1;
    spec.width_max = nvars;
    spec.seed = seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(index);
    return gen_random(spec);
}

DifferentialSummary run_random_suite(int nvars, int samples, std::uint64_t seed,
                                     bool inject_fault) {
    DifferentialSummary summary;
    for (int i = 0; i < samples; ++i) {
        Formula f = random_suite_formula(nvars, seed, i);
        ++summary.checked;
        if (auto d = check_formula_agreement(f, inject_fault))
            summary.disagreements.push_back(*d);
    }
    return summary;
}

}  // namespace ctsat
