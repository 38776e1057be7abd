#include "ctsat/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ctsat/oracle.hpp"

namespace ctsat {
namespace {

// std::uniform_int_distribution is not reproducible across standard
// libraries; a plain modulo draw keeps seeds portable.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t count) {
    return rng() % count;
}

}  // namespace

Formula gen_blowup(int n) {
    if (n < 1)
        throw std::invalid_argument(
            "blowup formula needs n >= 1 (n = 0 would be the null-clause "
            "formula)");
    std::vector<Literal> lits;
    lits.reserve(n);
    for (int v = 1; v <= n; ++v) lits.push_back(Literal::positive(v));
    return Formula({Clause::of(std::span<const Literal>(lits))});
}

Formula gen_random(const RandomFormulaSpec& spec) {
    if (spec.nvars < 1 || spec.nvars > 24)
        throw std::invalid_argument("gen_random needs 1 <= nvars <= 24");
    if (spec.nclauses < 0)
        throw std::invalid_argument("gen_random needs nclauses >= 0");
    if (spec.width_min < 1 || spec.width_min > spec.width_max ||
        spec.width_max > spec.nvars)
        throw std::invalid_argument(
            "gen_random needs 1 <= width_min <= width_max <= nvars");

    std::mt19937_64 rng(spec.seed);
    std::vector<int> pool(spec.nvars);
    std::iota(pool.begin(), pool.end(), 1);

    std::vector<Clause> clauses;
    clauses.reserve(spec.nclauses);
    for (int i = 0; i < spec.nclauses; ++i) {
        int width = spec.width_min +
                    static_cast<int>(bounded(
                        rng, spec.width_max - spec.width_min + 1));
        std::vector<Literal> lits;
        lits.reserve(width);
        if (spec.allow_tautologies) {
            for (int j = 0; j < width; ++j) {
                int var = 1 + static_cast<int>(bounded(rng, spec.nvars));
                bool positive = rng() & 1u;
                lits.push_back(positive ? Literal::positive(var)
                                        : Literal::negative(var));
            }
        } else {
            // partial Fisher-Yates: first `width` entries become the draw
            for (int j = 0; j < width; ++j) {
                std::size_t k = j + bounded(rng, spec.nvars - j);
                std::swap(pool[j], pool[k]);
                bool positive = rng() & 1u;
                lits.push_back(positive ? Literal::positive(pool[j])
                                        : Literal::negative(pool[j]));
            }
            std::sort(pool.begin(), pool.end());
        }
        clauses.push_back(Clause::of(std::span<const Literal>(lits)));
    }
    return Formula(std::move(clauses));
}

void for_each_exhaustive_formula(
    int nvars, int max_clauses,
    const std::function<void(const Formula&)>& fn) {
    if (nvars < 1 || nvars > 3)
        throw std::invalid_argument("exhaustive stream is capped at 3 variables");
    if (max_clauses < 1 || max_clauses > 4)
        throw std::invalid_argument("exhaustive stream is capped at 4 clauses");

    std::vector<int> vars(nvars);
    std::iota(vars.begin(), vars.end(), 1);
    auto space = complete_formula(vars);  // canonical, 3^nvars clauses

    std::size_t total = space.size();
    for (int k = 1; k <= max_clauses; ++k) {
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<Clause> clauses;
            clauses.reserve(k);
            for (std::size_t idx : pick) clauses.push_back(space[idx]);
            fn(Formula(std::move(clauses)));
            // advance the combination
            int pos = k - 1;
            while (pos >= 0 && pick[pos] == total - k + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int j = pos + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

std::uint64_t exhaustive_formula_count(int nvars, int max_clauses) {
    if (nvars < 1 || nvars > 3 || max_clauses < 1 || max_clauses > 4)
        throw std::invalid_argument("exhaustive stream caps exceeded");
    std::uint64_t space = 1;
    for (int i = 0; i < nvars; ++i) space *= 3;
    std::uint64_t total = 0;
    for (int k = 1; k <= max_clauses; ++k) {
        std::uint64_t binom = 1;
        for (int j = 0; j < k; ++j) binom = binom * (space - j) / (j + 1);
        total += binom;
    }
    return total;
}

}  // namespace ctsat
