#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ctsat/formula.hpp"
#include "ctsat/solver.hpp"

namespace ctsat {

// Brute-force operations refuse inputs beyond these sizes rather than
// silently truncating; each stays in the seconds range at its cap.
inline constexpr std::size_t truth_table_var_guard = 24;
inline constexpr std::size_t complete_formula_var_guard = 12;
inline constexpr std::size_t sibling_check_var_guard = 4;

class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumerates all 2^|V| assignments in binary counting order (smallest
// variable at the least significant bit) and reports the first satisfying
// one as witness.
Verdict truth_table_sat(const Formula& f);

// All 2^|vars| clauses with exactly one literal per variable, in canonical
// order. `vars` must be sorted and distinct.
std::vector<Clause> fully_populated_clauses(std::span<const int> vars);

// The fully populated clause of the given canonical rank (0-based).
Clause fully_populated_at(std::span<const int> vars, std::uint64_t rank);

// Decides satisfiability through the fully-populated-clause
// characterization: F is satisfiable iff some fully populated clause C
// over V has no subset among F's clauses; the witness is the assignment
// falsifying the first such C. Tautology clauses are ignored.
Verdict full_clause_sat(const Formula& f);

// Every non-tautology clause over `vars`, built as the union of the
// powersets of all fully populated clauses; size 3^|vars|, canonical order.
std::vector<Clause> complete_formula(std::span<const int> vars);

// Two unequal clauses, both fully populated over `vars`.
bool are_siblings(const Clause& a, const Clause& b, std::span<const int> vars);

// Exhaustively verifies, over all ordered sibling pairs (C1, C2) over
// `vars`, that every D1 in P(C1)-P(C2) has a sibling D2 in P(C2) over some
// subset of `vars`.
bool check_sibling_property(std::span<const int> vars);

}  // namespace ctsat
