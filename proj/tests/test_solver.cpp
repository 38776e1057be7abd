#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctsat/differential.hpp"
#include "ctsat/generators.hpp"
#include "ctsat/io.hpp"
#include "ctsat/oracle.hpp"
#include "ctsat/solver.hpp"

using namespace ctsat;

namespace {

SolveConfig with_schedule(PruneSchedule s) {
    SolveConfig cfg;
    cfg.schedule = s;
    return cfg;
}

}  // namespace

TEST_CASE("the worked two-clause example is satisfiable with the all-false witness") {
    Formula f = parse_native("-1\n1 -2\n");
    Verdict v = tree_solve(f);
    CHECK(v.sat());
    CHECK(v.procedure == "clause-tree/per-clause");
    REQUIRE(v.witness);
    CHECK_FALSE(v.witness->value(1));
    CHECK_FALSE(v.witness->value(2));
    CHECK(evaluate_formula(f, *v.witness));
}

TEST_CASE("a null clause rejects immediately") {
    Formula f({Clause(), Clause::of({1})});
    Verdict v = tree_solve(f);
    CHECK_FALSE(v.sat());
    CHECK(v.counters.nodes_created == 0);  // rejected before any insertion
}

TEST_CASE("complementary unit clauses are unsatisfiable") {
    Formula f({Clause::of({1}), Clause::of({-1})});
    Verdict v = tree_solve(f);
    CHECK_FALSE(v.sat());
    CHECK_FALSE(truth_table_sat(f).sat());
    // clause {x1} closes the right pointer, {-x1} the left
    CHECK(v.counters.per_clause.size() == 2);
}

TEST_CASE("rejection can happen at the open-pointer check") {
    // after the two unit clauses kill both sides, x2 cannot be inserted
    Formula f({Clause::of({1}), Clause::of({-1}), Clause::of({2})});
    Verdict v = tree_solve(f);
    CHECK_FALSE(v.sat());
    CHECK(v.counters.per_clause.size() == 2);  // third clause never pruned
}

TEST_CASE("blowup formula counters at n=12") {
    Verdict v = tree_solve(gen_blowup(12));
    CHECK(v.sat());
    CHECK(v.counters.peak_nodes_incl_root == 4096);
    CHECK(v.counters.prune_pointer_visits == 8191);
    CHECK(v.counters.nodes_deleted == 0);
}

TEST_CASE("schedules agree on the verdict but not necessarily the counters") {
    Formula f = parse_native("-1\n1 -2\n");
    Verdict pc = tree_solve(f, with_schedule(PruneSchedule::per_clause));
    Verdict post = tree_solve(f, with_schedule(PruneSchedule::post_construction));
    CHECK(pc.result == post.result);
    CHECK(post.procedure == "clause-tree/post-construction");
    // post-construction builds both x2 nodes before the first prune
    CHECK(pc.counters.peak_nodes_incl_root == 3);
    CHECK(post.counters.peak_nodes_incl_root == 4);
    CHECK(post.counters.nodes_deleted == 1);
}

TEST_CASE("empty formula follows the policy flag") {
    SolveConfig accept;  // default
    Verdict v = tree_solve(Formula(), accept);
    CHECK(v.sat());
    REQUIRE(v.witness);
    CHECK(evaluate_formula(Formula(), *v.witness));

    SolveConfig reject;
    reject.empty_formula = EmptyFormulaPolicy::reject;
    CHECK_FALSE(tree_solve(Formula(), reject).sat());

    // the policy has no effect on nonempty formulas
    Formula f({Clause::of({1})});
    CHECK(tree_solve(f, accept).sat());
    CHECK(tree_solve(f, reject).sat());
}

TEST_CASE("witness on a single positive unit clause") {
    Formula f({Clause::of({1})});
    Verdict v = tree_solve(f);
    REQUIRE(v.witness);
    // surviving path is {-x1}; falsifying it maps x1 to true
    CHECK(v.witness->value(1));
}

TEST_CASE("witness default-falses variables that never reach the tree") {
    // x2 appears only in a tautology clause, which is skipped
    Formula f({Clause::of({1}), Clause::of({2, -2})});
    Verdict v = tree_solve(f);
    REQUIRE(v.witness);
    CHECK(v.witness->value(1));
    CHECK_FALSE(v.witness->value(2));
    CHECK(evaluate_formula(f, *v.witness));
}

TEST_CASE("extract_witness demands an open pointer") {
    ClauseTree t;
    t.insert_variable(1);
    t.prune(Clause::of({1}));
    t.prune(Clause::of({-1}));
    CHECK_THROWS_AS(extract_witness(t, Formula()), std::logic_error);
}

TEST_CASE("adding a tautology clause changes neither verdict nor tree") {
    // one tautology over an existing variable, one over a fresh variable
    for (const Clause& taut_clause : {Clause::of({1, -1}), Clause::of({9, -9})}) {
        for_each_exhaustive_formula(2, 3, [&](const Formula& f) {
            auto clauses = f.clauses();
            clauses.insert(clauses.begin() + clauses.size() / 2, taut_clause);
            Formula with_taut(std::move(clauses));

            for (PruneSchedule s :
                 {PruneSchedule::per_clause, PruneSchedule::post_construction}) {
                std::string dot_plain, dot_taut;
                TraceSink grab_plain = [&](SolveEvent, std::size_t,
                                           const ClauseTree& t) {
                    dot_plain = t.export_dot();
                };
                TraceSink grab_taut = [&](SolveEvent, std::size_t,
                                          const ClauseTree& t) {
                    dot_taut = t.export_dot();
                };
                Verdict plain = tree_solve(f, with_schedule(s), grab_plain);
                Verdict taut = tree_solve(with_taut, with_schedule(s), grab_taut);
                REQUIRE(plain.result == taut.result);
                REQUIRE(dot_plain == dot_taut);  // final tree identical
                if (taut.sat()) {
                    REQUIRE(taut.witness);
                    REQUIRE(evaluate_formula(with_taut, *taut.witness));
                }
            }
        });
    }
}

TEST_CASE("verdicts match the oracles on all small formulas") {
    auto summary = run_exhaustive_suite(3, 4);
    CHECK(summary.checked == exhaustive_formula_count(3, 4));
    CHECK(summary.checked == 20853);
    for (const auto& d : summary.disagreements)
        MESSAGE(d.formula, " -> ", d.detail);
    CHECK(summary.disagreements.empty());
}

TEST_CASE("verdicts match the oracles on seeded random formulas") {
    auto summary = run_random_suite(4, 2000, 99);
    CHECK(summary.checked == 2000);
    CHECK(summary.disagreements.empty());
}

TEST_CASE("the differential harness catches an injected fault") {
    auto summary = run_exhaustive_suite(1, 1, /*inject_fault=*/true);
    CHECK(summary.checked == 3);
    CHECK_FALSE(summary.disagreements.empty());
}

TEST_CASE("witnesses from 500 satisfiable random formulas all check out") {
    int found = 0;
    int index = 0;
    while (found < 500) {
        Formula f = random_suite_formula(4, 4242, index++);
        REQUIRE(index < 100000);
        if (!truth_table_sat(f).sat()) continue;
        ++found;
        Verdict v = tree_solve(f);
        REQUIRE(v.sat());
        REQUIRE(v.witness);
        REQUIRE(evaluate_formula(f, *v.witness));
    }
}

TEST_CASE("node limit raises a resource error with context") {
    SolveConfig cfg;
    cfg.node_limit = 16;
    CHECK_THROWS_AS(tree_solve(gen_blowup(5), cfg), ResourceLimitError);
    try {
        tree_solve(gen_blowup(5), cfg);
    } catch (const ResourceLimitError& e) {
        CHECK(e.counters().current_nodes_incl_root == 17);
    }
    cfg.node_limit = 32;
    CHECK(tree_solve(gen_blowup(5), cfg).sat());  // exactly 2^5 nodes fit
    cfg.node_limit = std::nullopt;
    CHECK(tree_solve(gen_blowup(5), cfg).sat());
}

TEST_CASE("trace events fire per clause in order") {
    Formula f = parse_native("-1\n1 -2\n");
    std::vector<std::pair<SolveEvent, std::size_t>> events;
    TraceSink sink = [&](SolveEvent e, std::size_t i, const ClauseTree&) {
        events.emplace_back(e, i);
    };
    tree_solve(f, SolveConfig{}, sink);
    REQUIRE(events.size() == 4);
    CHECK(events[0] == std::pair{SolveEvent::clause_inserted, std::size_t{0}});
    CHECK(events[1] == std::pair{SolveEvent::clause_pruned, std::size_t{0}});
    CHECK(events[2] == std::pair{SolveEvent::clause_inserted, std::size_t{1}});
    CHECK(events[3] == std::pair{SolveEvent::clause_pruned, std::size_t{1}});
}
