#include "ctsat/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ctsat {

using boost::multiprecision::cpp_int;

std::uint64_t literal_count(const Formula& f, Literal l) {
    std::uint64_t count = 0;
    for (const Clause& c : f.clauses())
        if (c.contains(l)) ++count;
    return count;
}

BoundsReport apply_bounds(const Formula& f) {
    for (const Clause& c : f.clauses())
        if (c.tautology())
            throw std::invalid_argument(
                "apply_bounds requires a tautology-free formula");
    const auto& vars = f.variables();
    if (vars.empty())
        throw std::invalid_argument(
            "apply_bounds requires at least one variable");
    unsigned n = static_cast<unsigned>(vars.size());

    cpp_int cardinality_threshold = pow(cpp_int(3), n) - pow(cpp_int(2), n);
    cpp_int polarity_threshold = pow(cpp_int(3), n - 1) - pow(cpp_int(2), n - 1);

    BoundsReport report;
    report.variable_count = vars.size();
    report.cardinality_threshold = cardinality_threshold.str();
    report.polarity_threshold = polarity_threshold.str();
    for (int v : vars) {
        report.stats.push_back({v, literal_count(f, Literal::positive(v)),
                                literal_count(f, Literal::negative(v))});
    }

    if (cpp_int(f.size()) > cardinality_threshold) {
        report.verdict = BoundsVerdict::unsat_by_cardinality;
        return report;
    }
    for (const VarPolarityCount& s : report.stats) {
        cpp_int lo = std::min(s.positive, s.negative);
        if (lo > polarity_threshold) {
            report.verdict = BoundsVerdict::unsat_by_min_count;
            return report;
        }
    }
    for (const VarPolarityCount& s : report.stats) {
        cpp_int pos(s.positive), neg(s.negative);
        if (pos <= polarity_threshold && polarity_threshold < neg)
            report.forced[s.var] = false;
        else if (neg <= polarity_threshold && polarity_threshold < pos)
            report.forced[s.var] = true;
    }
    report.verdict = BoundsVerdict::unknown;
    return report;
}

std::string to_string(BoundsVerdict v) {
    switch (v) {
        case BoundsVerdict::unsat_by_cardinality: return "unsat-by-cardinality";
        case BoundsVerdict::unsat_by_min_count: return "unsat-by-min-count";
        case BoundsVerdict::unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace ctsat
