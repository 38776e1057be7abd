#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctsat/formula.hpp"

namespace ctsat {

enum class BoundsVerdict {
    unsat_by_cardinality,  // ||F|| > 3^n - 2^n
    unsat_by_min_count,    // some variable with min(#pos, #neg) > 3^(n-1) - 2^(n-1)
    unknown,
};

struct VarPolarityCount {
    int var = 0;
    std::uint64_t positive = 0;  // #(F, x)
    std::uint64_t negative = 0;  // #(F, -x)
};

struct BoundsReport {
    BoundsVerdict verdict = BoundsVerdict::unknown;
    // Literals every satisfying assignment must take; empty when the
    // verdict is an unsat variant.
    std::map<int, bool> forced;
    std::vector<VarPolarityCount> stats;
    std::size_t variable_count = 0;
    // Decimal renderings of the exact thresholds (they outgrow 64 bits at
    // n >= 41).
    std::string cardinality_threshold;
    std::string polarity_threshold;
};

// Number of clauses of f containing the literal.
std::uint64_t literal_count(const Formula& f, Literal l);

// Evaluates the four pre-filter bounds on a normalized, tautology-free
// formula with at least one variable: the cardinality bound, the
// min-polarity-count bound, and the two forced-literal bounds (single
// pass, no iteration). Thresholds use exact integer arithmetic.
BoundsReport apply_bounds(const Formula& f);

std::string to_string(BoundsVerdict v);

}  // namespace ctsat
