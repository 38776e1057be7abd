#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctsat/formula.hpp"

namespace ctsat {

struct Disagreement {
    std::string formula;  // native serialization of the offending input
    std::string detail;
};

struct DifferentialSummary {
    std::uint64_t checked = 0;
    std::vector<Disagreement> disagreements;

    bool clean() const { return disagreements.empty(); }
};

// Runs the clause-tree solver under both prune schedules plus the
// truth-table and full-clause deciders on one formula; reports a
// disagreement when any verdict differs or a satisfiable verdict carries a
// witness that does not satisfy the formula. `inject_fault` deliberately
// flips the per-clause tree verdict so the harness can prove it would
// catch a broken solver.
std::optional<Disagreement> check_formula_agreement(const Formula& f,
                                                    bool inject_fault = false);

// All formulas with up to `max_clauses` distinct non-tautology clauses
// over variables 1..nvars.
DifferentialSummary run_exhaustive_suite(int nvars, int max_clauses,
                                         bool inject_fault = false);

// `samples` seeded random formulas over at most `nvars` variables; clause
// counts cycle through 1..8 and widths span 1..nvars.
DifferentialSummary run_random_suite(int nvars, int samples, std::uint64_t seed,
                                     bool inject_fault = false);

// The random formula used at step `index` of run_random_suite -- shared so
// other suites (bounds soundness, witness checks) see the same stream.
Formula random_suite_formula(int nvars, std::uint64_t seed, int index);

}  // namespace ctsat
