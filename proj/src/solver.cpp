#include "ctsat/solver.hpp"

namespace ctsat {
namespace {

Verdict rejected(const ClauseTree& tree, const SolveConfig& cfg) {
    return Verdict{SatResult::unsatisfiable, std::nullopt, tree.counters(),
                   "clause-tree/" + to_string(cfg.schedule),
                   tree.open_pointer_count()};
}

}  // namespace

Verdict tree_solve(const Formula& f, const SolveConfig& cfg,
                   const TraceSink& trace) {
    ClauseTree tree(cfg.node_limit);
    if (f.clauses().empty() && cfg.empty_formula == EmptyFormulaPolicy::reject)
        return rejected(tree, cfg);

    const auto& clauses = f.clauses();
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const Clause& c = clauses[i];
        if (c.is_null()) return rejected(tree, cfg);
        if (c.tautology()) continue;
        for (int v : c.variables()) {
            if (tree.contains_variable(v)) continue;
            if (!tree.has_open_pointer()) return rejected(tree, cfg);
            tree.insert_variable(v);
        }
        if (trace) trace(SolveEvent::clause_inserted, i, tree);
        if (cfg.schedule == PruneSchedule::per_clause) {
            std::uint64_t visits = tree.prune(c);
            tree.note_clause_snapshot(i, visits);
            if (trace) trace(SolveEvent::clause_pruned, i, tree);
        }
    }
    if (cfg.schedule == PruneSchedule::post_construction) {
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            const Clause& c = clauses[i];
            if (c.tautology()) continue;
            std::uint64_t visits = tree.prune(c);
            tree.note_clause_snapshot(i, visits);
            if (trace) trace(SolveEvent::clause_pruned, i, tree);
        }
    }
    if (!tree.has_open_pointer()) return rejected(tree, cfg);
    return Verdict{SatResult::satisfiable, extract_witness(tree, f),
                   tree.counters(), "clause-tree/" + to_string(cfg.schedule),
                   tree.open_pointer_count()};
}

std::pair<Verdict, std::vector<TraceFrame>> solve_with_trace(
    const Formula& f, const SolveConfig& cfg) {
    std::vector<TraceFrame> frames;
    TraceSink sink = [&](SolveEvent e, std::size_t i, const ClauseTree& t) {
        frames.push_back({e, i, t.export_dot()});
    };
    Verdict v = tree_solve(f, cfg, sink);
    return {std::move(v), std::move(frames)};
}

Assignment extract_witness(const ClauseTree& t, const Formula& f) {
    auto paths = t.open_paths();
    if (paths.empty())
        throw std::logic_error("extract_witness on a tree with no open pointer");
    Assignment a;
    for (Literal l : paths.front().literals()) a.set(l.var(), !l.is_positive());
    for (int v : f.variables())
        if (!a.defined(v)) a.set(v, false);
    return a;
}

std::string to_string(PruneSchedule s) {
    return s == PruneSchedule::per_clause ? "per-clause" : "post-construction";
}

std::string to_string(SatResult r) {
    return r == SatResult::satisfiable ? "SATISFIABLE" : "UNSATISFIABLE";
}

}  // namespace ctsat
