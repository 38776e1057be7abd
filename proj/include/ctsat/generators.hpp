#pragma once

#include <cstdint>
#include <functional>

#include "ctsat/formula.hpp"

namespace ctsat {

// The single clause {x1, ..., xn}, all positive. Processing it builds the
// full 2^n tree before the first prune; family membership requires n > 1
// (n = 1 is permitted for testing).
Formula gen_blowup(int n);
constexpr bool blowup_family_member(int n) { return n > 1; }

struct RandomFormulaSpec {
    int nvars = 0;
    int nclauses = 0;
    int width_min = 1;
    int width_max = 1;
    std::uint64_t seed = 0;
    // With tautologies off, variables are drawn without replacement per
    // clause, so no complementary pair (and no duplicate literal) can
    // occur. With them on, literals are drawn independently.
    bool allow_tautologies = false;
};

// Deterministic for a fixed spec: clause width uniform in range, variables
// sampled per clause, polarity a fair coin. Exact duplicate clauses
// collapse per Formula semantics, so the result may hold fewer than
// nclauses clauses.
Formula gen_random(const RandomFormulaSpec& spec);

// Streams every formula whose clauses are k (1 <= k <= max_clauses)
// distinct non-tautology clauses over the variables 1..nvars, in a stable
// order. Caps: nvars <= 3, max_clauses <= 4.
void for_each_exhaustive_formula(int nvars, int max_clauses,
                                 const std::function<void(const Formula&)>& fn);

// sum over k of C(3^nvars, k) -- the number of formulas the stream yields.
std::uint64_t exhaustive_formula_count(int nvars, int max_clauses);

}  // namespace ctsat
