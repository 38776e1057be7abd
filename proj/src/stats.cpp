#include "ctsat/stats.hpp"

#include <cstdio>
#include <sstream>

namespace ctsat {

std::string verdict_kv(const Verdict& v) {
    std::ostringstream out;
    out << "verdict=" << to_string(v.result) << '\n';
    out << "procedure=" << v.procedure << '\n';
    const Counters& c = v.counters;
    out << "nodes_created=" << c.nodes_created << '\n';
    out << "nodes_deleted=" << c.nodes_deleted << '\n';
    out << "peak_nodes_incl_root=" << c.peak_nodes_incl_root << '\n';
    out << "current_nodes_incl_root=" << c.current_nodes_incl_root << '\n';
    out << "nodes_excl_root="
        << (c.current_nodes_incl_root > 0 ? c.current_nodes_incl_root - 1 : 0)
        << '\n';
    out << "prune_pointer_visits=" << c.prune_pointer_visits << '\n';
    out << "open_paths_final=" << v.open_paths_final << '\n';
    if (v.witness) {
        out << "witness=";
        bool first = true;
        for (const auto& [var, val] : v.witness->values()) {
            if (!first) out << ' ';
            out << (val ? var : -var);
            first = false;
        }
        out << '\n';
    }
    out << "snapshot_count=" << c.per_clause.size() << '\n';
    for (std::size_t i = 0; i < c.per_clause.size(); ++i) {
        const ClauseSnapshot& s = c.per_clause[i];
        out << "snapshot_" << i << "=clause:" << s.clause_index
            << " peak:" << s.peak_nodes << " current:" << s.current_nodes
            << " visits:" << s.prune_visits_delta << '\n';
    }
    return out.str();
}

std::string bench_csv_header() {
    return "n,peak_nodes_incl_root,nodes_excl_root,nodes_deleted,"
           "prune_pointer_visits,open_paths_final,verdict,wall_time_ns,"
           "visits_ratio\n";
}

std::string bench_csv_row(int n, const Verdict& v, std::uint64_t wall_time_ns,
                          std::optional<double> visits_ratio) {
    const Counters& c = v.counters;
    std::ostringstream out;
    out << n << ',' << c.peak_nodes_incl_root << ','
        << (c.current_nodes_incl_root > 0 ? c.current_nodes_incl_root - 1 : 0)
        << ',' << c.nodes_deleted << ',' << c.prune_pointer_visits << ','
        << v.open_paths_final << ',' << to_string(v.result) << ','
        << wall_time_ns << ',';
    if (visits_ratio) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", *visits_ratio);
        out << buf;
    }
    out << '\n';
    return out.str();
}

std::string bounds_kv(const BoundsReport& r) {
    std::ostringstream out;
    out << "verdict=" << to_string(r.verdict) << '\n';
    out << "n=" << r.variable_count << '\n';
    out << "cardinality_threshold=" << r.cardinality_threshold << '\n';
    out << "polarity_threshold=" << r.polarity_threshold << '\n';
    out << "forced_count=" << r.forced.size() << '\n';
    for (const auto& [var, val] : r.forced)
        out << "forced_x" << var << '=' << (val ? "true" : "false") << '\n';
    for (const VarPolarityCount& s : r.stats)
        out << "count_x" << s.var << '=' << s.positive << ',' << s.negative
            << '\n';
    return out.str();
}

std::string bounds_csv_header() {
    return "n,clauses,verdict,forced,cardinality_threshold,polarity_threshold\n";
}

std::string bounds_csv_row(const BoundsReport& r, std::size_t clause_count) {
    std::ostringstream out;
    out << r.variable_count << ',' << clause_count << ','
        << to_string(r.verdict) << ',';
    bool first = true;
    for (const auto& [var, val] : r.forced) {
        if (!first) out << ';';
        out << 'x' << var << '=' << (val ? "true" : "false");
        first = false;
    }
    out << ',' << r.cardinality_threshold << ',' << r.polarity_threshold
        << '\n';
    return out.str();
}

}  // namespace ctsat
