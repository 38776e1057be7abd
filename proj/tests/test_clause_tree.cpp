#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ctsat/clause_tree.hpp"
#include "ctsat/generators.hpp"
#include "ctsat/oracle.hpp"
#include "ctsat/solver.hpp"
#include "test_util.hpp"

using namespace ctsat;

TEST_CASE("a fresh tree is the root with one open pointer") {
    ClauseTree t;
    CHECK(t.node_count_incl_root() == 1);
    CHECK(t.open_pointer_count() == 1);
    CHECK(t.pointer_count() == 1);
    CHECK(t.counters().nodes_created == 0);
    CHECK(t.counters().nodes_deleted == 0);
    CHECK(t.counters().peak_nodes_incl_root == 1);
    CHECK(t.counters().prune_pointer_visits == 0);
    CHECK(t.open_paths() == std::vector<Clause>{Clause()});
}

TEST_CASE("insert_variable doubles the frontier") {
    ClauseTree t;
    t.insert_variable(1);
    CHECK(t.node_count_incl_root() == 2);
    CHECK(t.open_pointer_count() == 2);
    t.insert_variable(2);
    CHECK(t.node_count_incl_root() == 4);
    CHECK(t.open_pointer_count() == 4);
}

TEST_CASE("inserting n variables fills the tree to 2^n nodes") {
    for (int n = 1; n <= 10; ++n) {
        ClauseTree t;
        for (int v = 1; v <= n; ++v) t.insert_variable(v);
        std::uint64_t expect = std::uint64_t{1} << n;
        CHECK(t.node_count_incl_root() == expect);
        CHECK(t.open_pointer_count() == expect);
        CHECK(t.counters().nodes_created == expect - 1);
        CHECK(t.counters().peak_nodes_incl_root == expect);
    }
}

TEST_CASE("total pointers = 1 + 2 * nodes excluding root") {
    for (int n = 1; n <= 18; ++n) {
        ClauseTree t;
        for (int v = 1; v <= n; ++v) t.insert_variable(v);
        std::uint64_t nodes_excl_root = t.node_count_incl_root() - 1;
        CHECK(t.pointer_count() == 1 + 2 * nodes_excl_root);
        CHECK(t.pointer_count() == (std::uint64_t{2} << n) - 1);
    }
}

TEST_CASE("insert contract violations") {
    ClauseTree t;
    t.insert_variable(1);
    CHECK_THROWS_AS(t.insert_variable(1), std::logic_error);
    t.prune(Clause::of({1}));
    t.prune(Clause::of({-1}));
    CHECK_FALSE(t.has_open_pointer());
    CHECK_THROWS_AS(t.insert_variable(2), std::logic_error);
}

TEST_CASE("prune rejects null, tautology, and unknown-variable clauses") {
    ClauseTree t;
    t.insert_variable(1);
    CHECK_THROWS_AS(t.prune(Clause()), std::logic_error);
    CHECK_THROWS_AS(t.prune(Clause::of({1, -1})), std::logic_error);
    CHECK_THROWS_AS(t.prune(Clause::of({2})), std::logic_error);
}

TEST_CASE("pruning the one-variable tree closes the matching side") {
    ClauseTree t;
    t.insert_variable(1);
    std::uint64_t visits = t.prune(Clause::of({-1}));
    // root pointer, then the node's left and right pointers
    CHECK(visits == 3);
    CHECK(t.counters().nodes_deleted == 0);
    CHECK(t.open_pointer_count() == 1);
    CHECK(t.open_paths() == std::vector<Clause>{Clause::of({1})});
}

TEST_CASE("pruning below a child pointer deletes the whole subtree") {
    ClauseTree t;
    t.insert_variable(1);
    t.insert_variable(2);
    std::uint64_t visits = t.prune(Clause::of({-1}));
    // all 7 pointers except the two below the closed one
    CHECK(visits == 5);
    CHECK(t.counters().nodes_deleted == 1);  // the left x2 node
    CHECK(t.node_count_incl_root() == 3);
    CHECK(t.open_pointer_count() == 2);
}

TEST_CASE("pruning a fully populated clause on the full tree") {
    for (int n : {2, 3, 6, 10}) {
        ClauseTree t;
        std::vector<int> codes;
        for (int v = 1; v <= n; ++v) {
            t.insert_variable(v);
            codes.push_back(v);
        }
        std::uint64_t opens_before = t.open_pointer_count();
        std::uint64_t visits = t.prune(Clause::of(std::span<const int>(codes)));
        CHECK(visits == (std::uint64_t{2} << n) - 1);  // every pointer
        CHECK(t.counters().nodes_deleted == 0);
        CHECK(t.open_pointer_count() == opens_before - 1);
    }
}

TEST_CASE("a unit clause below the frontier prunes every matching branch") {
    // full tree over x1..x3; {-x2} matches at both x2 nodes' left pointers.
    // Hand trace, left before right: root, x1.L, x2.L (match, subtree of
    // one x3 node deleted, not descended), x2.R, x3.L, x3.R, then the same
    // five under x1.R: 11 visits, 2 deletions.
    ClauseTree t;
    for (int v : {1, 2, 3}) t.insert_variable(v);
    std::uint64_t visits = t.prune(Clause::of({-2}));
    CHECK(visits == 11);
    CHECK(t.counters().nodes_deleted == 2);
    CHECK(t.node_count_incl_root() == 6);
    CHECK(t.open_pointer_count() == 4);
    for (const Clause& path : t.open_paths())
        CHECK(path.contains(Literal::positive(2)));

    // refilling the frontier creates exactly one node per open pointer
    std::uint64_t created_before = t.counters().nodes_created;
    t.insert_variable(4);
    CHECK(t.counters().nodes_created - created_before == 4);
    CHECK(t.open_pointer_count() == 8);
}

TEST_CASE("pruning along an already-null path changes nothing") {
    ClauseTree t;
    t.insert_variable(1);
    t.prune(Clause::of({-1}));
    auto counters_before = t.counters();
    std::uint64_t visits = t.prune(Clause::of({-1}));
    CHECK(visits == 3);  // root, null left (counted, not descended), open right
    CHECK(t.counters().nodes_deleted == counters_before.nodes_deleted);
    CHECK(t.open_pointer_count() == 1);
    CHECK(t.open_paths() == std::vector<Clause>{Clause::of({1})});
}

TEST_CASE("prune never creates open pointers") {
    ClauseTree t;
    for (int v = 1; v <= 3; ++v) t.insert_variable(v);
    std::uint64_t opens = t.open_pointer_count();
    for (const Clause& c :
         {Clause::of({1, 2}), Clause::of({-1}), Clause::of({3}), Clause::of({-2, -3})}) {
        t.prune(c);
        CHECK(t.open_pointer_count() <= opens);
        opens = t.open_pointer_count();
    }
}

TEST_CASE("open paths of the worked two-clause example") {
    // F = {{-x1}, {x1, -x2}}: insert x1, prune, insert x2, prune
    ClauseTree t;
    t.insert_variable(1);
    t.prune(Clause::of({-1}));
    t.insert_variable(2);
    t.prune(Clause::of({1, -2}));
    CHECK(t.open_paths() == std::vector<Clause>{Clause::of({1, 2})});
}

TEST_CASE("open paths after the blowup prune are every populated clause but one") {
    const int n = 3;
    ClauseTree t;
    std::vector<int> vars{1, 2, 3};
    for (int v : vars) t.insert_variable(v);
    Clause blowup = Clause::of({1, 2, 3});
    t.prune(blowup);

    std::vector<Clause> expected;
    for (const Clause& c : fully_populated_clauses(vars)) {
        bool has_subset = blowup.subset_of(c);
        if (!has_subset) expected.push_back(c);
    }
    CHECK(expected.size() == (1u << n) - 1);
    CHECK(t.open_paths() == expected);
}

TEST_CASE("open counter matches a full traversal after arbitrary work") {
    ClauseTree t;
    for (int v : {2, 1, 3}) t.insert_variable(v);
    t.prune(Clause::of({2, -3}));
    t.prune(Clause::of({-1}));
    std::uint64_t by_walk = t.open_paths().size();
    CHECK(t.open_pointer_count() == by_walk);
}

TEST_CASE("path-clause soundness across small formulas") {
    // For every formula over <= 3 variables with <= 3 clauses, drive the
    // tree the way the solver does and confirm no surviving open path
    // supersets any pruned clause.
    for_each_exhaustive_formula(3, 3, [](const Formula& f) {
        ClauseTree t;
        std::vector<Clause> pruned;
        for (const Clause& c : f.clauses()) {
            if (c.is_null()) break;
            if (c.tautology()) continue;
            bool stuck = false;
            for (int v : c.variables()) {
                if (t.contains_variable(v)) continue;
                if (!t.has_open_pointer()) { stuck = true; break; }
                t.insert_variable(v);
            }
            if (stuck) break;
            t.prune(c);
            pruned.push_back(c);
        }
        for (const Clause& path : t.open_paths()) {
            for (const Clause& c : pruned) {
                REQUIRE_FALSE(c.subset_of(path));
            }
        }
    });
}

TEST_CASE("per-clause snapshots record the prune history") {
    ClauseTree t;
    t.insert_variable(1);
    std::uint64_t v0 = t.prune(Clause::of({-1}));
    t.note_clause_snapshot(0, v0);
    t.insert_variable(2);
    std::uint64_t v1 = t.prune(Clause::of({1, -2}));
    t.note_clause_snapshot(1, v1);

    const auto& snaps = t.counters().per_clause;
    REQUIRE(snaps.size() == 2);
    CHECK(snaps[0].clause_index == 0);
    CHECK(snaps[0].peak_nodes == 2);
    CHECK(snaps[0].prune_visits_delta == 3);
    CHECK(snaps[1].clause_index == 1);
    CHECK(snaps[1].peak_nodes == 3);
    CHECK(snaps[1].current_nodes == 3);
    CHECK(snaps[1].prune_visits_delta == 5);
}

TEST_CASE("node limit aborts construction") {
    ClauseTree t(4);
    t.insert_variable(1);
    t.insert_variable(2);
    CHECK_THROWS_AS(t.insert_variable(3), ResourceLimitError);
    try {
        ClauseTree u(2);
        u.insert_variable(1);
        u.insert_variable(2);
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& e) {
        CHECK(e.counters().current_nodes_incl_root == 3);
    }
    CHECK_THROWS_AS(ClauseTree(0), std::invalid_argument);
}

TEST_CASE("identical runs produce identical trees, counters, and DOT") {
    auto run = [] {
        ClauseTree t;
        for (int v : {1, 2, 3}) t.insert_variable(v);
        t.prune(Clause::of({-1, 2}));
        t.prune(Clause::of({3}));
        return t.export_dot();
    };
    CHECK(run() == run());
}

TEST_CASE("DOT output matches the golden fixtures") {
    using ctsat::testing::fixture_text;

    ClauseTree fresh;
    CHECK(fresh.export_dot() == fixture_text("new_tree.dot"));

    ClauseTree t;
    t.insert_variable(1);
    CHECK(t.export_dot() == fixture_text("worked_insert1.dot"));
    t.prune(Clause::of({-1}));
    CHECK(t.export_dot() == fixture_text("worked_prune1.dot"));
    t.insert_variable(2);
    CHECK(t.export_dot() == fixture_text("worked_insert2.dot"));
    t.prune(Clause::of({1, -2}));
    CHECK(t.export_dot() == fixture_text("worked_prune2.dot"));
}
