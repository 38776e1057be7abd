#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctsat/clause_tree.hpp"
#include "ctsat/formula.hpp"

namespace ctsat {

// The tree can be pruned right after each clause is processed (the
// default) or once per clause only after the whole tree has been built.
// Both schedules decide alike; the counters differ.
enum class PruneSchedule { per_clause, post_construction };

// Taken literally, the algorithm accepts the empty formula; `reject` is
// the corrected behavior. Applies only to a formula with zero clauses.
enum class EmptyFormulaPolicy { accept, reject };

inline constexpr std::uint64_t default_node_limit = std::uint64_t{1} << 26;

struct SolveConfig {
    PruneSchedule schedule = PruneSchedule::per_clause;
    EmptyFormulaPolicy empty_formula = EmptyFormulaPolicy::accept;
    // Live-node guard; unset means unbounded.
    std::optional<std::uint64_t> node_limit = default_node_limit;
};

enum class SatResult { satisfiable, unsatisfiable };

struct Verdict {
    SatResult result = SatResult::unsatisfiable;
    std::optional<Assignment> witness;
    Counters counters;
    std::string procedure;
    // Surviving open paths when a tree procedure finished; 0 otherwise.
    std::uint64_t open_paths_final = 0;

    bool sat() const { return result == SatResult::satisfiable; }
};

enum class SolveEvent { clause_inserted, clause_pruned };

// Observer invoked after each clause's insertion phase and after each
// prune; `clause_index` is the clause's position in the input formula.
using TraceSink =
    std::function<void(SolveEvent, std::size_t clause_index, const ClauseTree&)>;

// Runs the clause-tree decision procedure: reject on a null clause, skip
// tautology clauses, insert each missing variable of the clause (rejecting
// if no open pointer remains), prune per schedule, and accept iff an open
// pointer survives. Variables within a clause are processed in ascending
// index order, clauses in input order. Throws ResourceLimitError when the
// live node count passes cfg.node_limit.
Verdict tree_solve(const Formula& f, const SolveConfig& cfg = {},
                   const TraceSink& trace = {});

// Witness from a surviving tree: take the first open path in canonical
// order and make every literal on it false (positive literal -> variable
// false, negative -> true); variables of f not on the path default to
// false.
Assignment extract_witness(const ClauseTree& t, const Formula& f);

struct TraceFrame {
    SolveEvent event = SolveEvent::clause_inserted;
    std::size_t clause_index = 0;
    std::string dot;
};

// tree_solve with a DOT snapshot per event, in event order.
std::pair<Verdict, std::vector<TraceFrame>> solve_with_trace(
    const Formula& f, const SolveConfig& cfg = {});

std::string to_string(PruneSchedule s);
std::string to_string(SatResult r);

}  // namespace ctsat
