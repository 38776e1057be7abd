#include "ctsat/oracle.hpp"

#include <algorithm>
#include <string>

namespace ctsat {
namespace {

void check_guard(std::size_t nvars, std::size_t guard, const char* what) {
    if (nvars > guard)
        throw GuardError(std::string(what) + " is guarded at " +
                         std::to_string(guard) + " variables, got " +
                         std::to_string(nvars));
}

void check_sorted_vars(std::span<const int> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] < 1) throw std::invalid_argument("variable index must be >= 1");
        if (i > 0 && vars[i] <= vars[i - 1])
            throw std::invalid_argument("variable set must be sorted and distinct");
    }
}

// Clause membership masks over the positions of a sorted variable list.
struct ClauseMasks {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
};

}  // namespace

Verdict truth_table_sat(const Formula& f) {
    const auto& vars = f.variables();
    check_guard(vars.size(), truth_table_var_guard, "truth_table_sat");

    std::vector<ClauseMasks> masks;
    for (const Clause& c : f.clauses()) {
        if (c.tautology()) continue;
        ClauseMasks m;
        for (Literal l : c.literals()) {
            auto it = std::lower_bound(vars.begin(), vars.end(), l.var());
            std::uint64_t bit = std::uint64_t{1} << (it - vars.begin());
            (l.is_positive() ? m.positive : m.negative) |= bit;
        }
        masks.push_back(m);
    }

    std::uint64_t all = vars.empty()
                            ? 0
                            : ((std::uint64_t{1} << vars.size()) - 1);
    std::uint64_t count = std::uint64_t{1} << vars.size();
    for (std::uint64_t m = 0; m < count; ++m) {
        bool ok = true;
        for (const ClauseMasks& cm : masks) {
            if ((cm.positive & m) == 0 && (cm.negative & (~m & all)) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return Verdict{SatResult::satisfiable,
                           Assignment::from_mask(vars, m), Counters{},
                           "truth-table"};
        }
    }
    return Verdict{SatResult::unsatisfiable, std::nullopt, Counters{},
                   "truth-table"};
}

Clause fully_populated_at(std::span<const int> vars, std::uint64_t rank) {
    // vars[0] is the most significant digit so ranks follow canonical
    // clause order (negative sorts before positive).
    std::vector<Literal> lits;
    lits.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        bool positive = (rank >> (vars.size() - 1 - i)) & 1u;
        lits.push_back(positive ? Literal::positive(vars[i])
                                : Literal::negative(vars[i]));
    }
    return Clause::of(std::span<const Literal>(lits));
}

std::vector<Clause> fully_populated_clauses(std::span<const int> vars) {
    check_sorted_vars(vars);
    check_guard(vars.size(), truth_table_var_guard, "fully_populated_clauses");
    std::vector<Clause> out;
    std::uint64_t count = std::uint64_t{1} << vars.size();
    out.reserve(count);
    for (std::uint64_t rank = 0; rank < count; ++rank)
        out.push_back(fully_populated_at(vars, rank));
    return out;
}

Verdict full_clause_sat(const Formula& f) {
    const auto& vars = f.variables();
    check_guard(vars.size(), truth_table_var_guard, "full_clause_sat");

    std::uint64_t count = std::uint64_t{1} << vars.size();
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        Clause candidate = fully_populated_at(vars, rank);
        bool blocked = false;
        for (const Clause& e : f.clauses()) {
            if (e.tautology()) continue;
            if (e.subset_of(candidate)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            Assignment witness;
            for (Literal l : candidate.literals())
                witness.set(l.var(), !l.is_positive());
            return Verdict{SatResult::satisfiable, witness, Counters{},
                           "full-clause"};
        }
    }
    return Verdict{SatResult::unsatisfiable, std::nullopt, Counters{},
                   "full-clause"};
}

std::vector<Clause> complete_formula(std::span<const int> vars) {
    check_sorted_vars(vars);
    check_guard(vars.size(), complete_formula_var_guard, "complete_formula");
    std::size_t n = vars.size();

    // A clause over vars is keyed by (membership mask, polarity mask);
    // the flags dedup across the overlapping powersets.
    std::uint64_t width = std::uint64_t{1} << n;
    std::vector<bool> seen(width << n, false);
    std::vector<Clause> out;
    for (std::uint64_t polarity = 0; polarity < width; ++polarity) {
        for (std::uint64_t members = 0; members < width; ++members) {
            std::uint64_t key = (members << n) | (polarity & members);
            if (seen[key]) continue;
            seen[key] = true;
            std::vector<Literal> lits;
            for (std::size_t i = 0; i < n; ++i) {
                if (!((members >> i) & 1u)) continue;
                bool positive = (polarity >> i) & 1u;
                lits.push_back(positive ? Literal::positive(vars[i])
                                        : Literal::negative(vars[i]));
            }
            out.push_back(Clause::of(std::span<const Literal>(lits)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool are_siblings(const Clause& a, const Clause& b, std::span<const int> vars) {
    return a != b && a.fully_populated_over(vars) && b.fully_populated_over(vars);
}

namespace {

Clause clause_subset(const Clause& c, std::uint64_t keep_mask) {
    std::vector<Literal> lits;
    const auto& all = c.literals();
    for (std::size_t i = 0; i < all.size(); ++i)
        if ((keep_mask >> i) & 1u) lits.push_back(all[i]);
    return Clause::of(std::span<const Literal>(lits));
}

std::vector<int> vars_subset(std::span<const int> vars, std::uint64_t keep_mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if ((keep_mask >> i) & 1u) out.push_back(vars[i]);
    return out;
}

}  // namespace

bool check_sibling_property(std::span<const int> vars) {
    check_sorted_vars(vars);
    check_guard(vars.size(), sibling_check_var_guard, "check_sibling_property");
    std::size_t n = vars.size();
    std::uint64_t subset_count = std::uint64_t{1} << n;

    auto populated = fully_populated_clauses(vars);
    for (const Clause& c1 : populated) {
        for (const Clause& c2 : populated) {
            if (c1 == c2) continue;
            for (std::uint64_t m1 = 0; m1 < subset_count; ++m1) {
                Clause d1 = clause_subset(c1, m1);
                if (d1.subset_of(c2)) continue;  // d1 in P(C1) - P(C2)
                bool found = false;
                for (std::uint64_t vm = 0; vm < subset_count && !found; ++vm) {
                    auto sub_vars = vars_subset(vars, vm);
                    for (std::uint64_t m2 = 0; m2 < subset_count && !found; ++m2) {
                        Clause d2 = clause_subset(c2, m2);
                        if (are_siblings(d1, d2, sub_vars)) found = true;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

}  // namespace ctsat
