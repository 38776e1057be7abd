#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsat/formula.hpp"

namespace ctsat {

// Child pointer of a tree node. Open means a child can still be added
// there, Null means no child can ever be added (Null is terminal).
enum class PointerState { open, null, child };

struct TreeNode;

struct Pointer {
    PointerState state = PointerState::open;
    std::unique_ptr<TreeNode> node;  // set iff state == child
};

// All nodes at the same depth carry the same variable label; labels along
// any root-to-node path are distinct. The left pointer out of a node
// labeled x stands for the literal -x, the right pointer for x.
struct TreeNode {
    explicit TreeNode(int label_) : label(label_) {}
    int label;
    Pointer left;
    Pointer right;
};

struct ClauseSnapshot {
    std::size_t clause_index = 0;
    std::uint64_t peak_nodes = 0;
    std::uint64_t current_nodes = 0;
    std::uint64_t prune_visits_delta = 0;
};

// Instrumentation record. All counters are monotone nondecreasing except
// the current node count. The root node is counted.
struct Counters {
    std::uint64_t nodes_created = 0;
    std::uint64_t nodes_deleted = 0;
    std::uint64_t peak_nodes_incl_root = 0;
    std::uint64_t current_nodes_incl_root = 0;
    std::uint64_t prune_pointer_visits = 0;
    std::vector<ClauseSnapshot> per_clause;
};

class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::uint64_t limit, Counters at_abort)
        : std::runtime_error("live node count exceeded the limit of " +
                             std::to_string(limit)),
          counters_(std::move(at_abort)) {}

    const Counters& counters() const { return counters_; }

private:
    Counters counters_;
};

// The binary trie built by the solver: a root node with a single pointer,
// below it one level per inserted variable, in insertion order. Every
// root-to-pointer path spells a clause (the set of literals on its edges;
// the root's own pointer spells the null clause), and every root-to-Open
// path spells a distinct fully populated clause over the inserted
// variables.
class ClauseTree {
public:
    explicit ClauseTree(std::optional<std::uint64_t> node_limit = std::nullopt);

    // Hangs a fresh node labeled v off every Open pointer. The caller must
    // have checked has_open_pointer() and rejected otherwise.
    void insert_variable(int v);

    // Depth-first traversal, left before right, testing each visited
    // pointer's path clause for superset of c. Matching pointers are set
    // to Null and their subtrees deleted without being descended; Null
    // pointers are counted but never descended. Returns the number of
    // pointers visited by this call.
    std::uint64_t prune(const Clause& c);

    // Clauses of all root-to-Open paths, in canonical order.
    std::vector<Clause> open_paths() const;

    // Deterministic Graphviz rendering; byte-stable for equal trees.
    std::string export_dot() const;

    bool contains_variable(int v) const;
    bool has_open_pointer() const { return open_count_ > 0; }
    std::uint64_t open_pointer_count() const { return open_count_; }
    std::uint64_t node_count_incl_root() const {
        return counters_.current_nodes_incl_root;
    }
    // Walks the tree; used to cross-check the incremental open counter.
    std::uint64_t pointer_count() const;

    const Counters& counters() const { return counters_; }
    const std::vector<int>& inserted() const { return inserted_; }

    void note_clause_snapshot(std::size_t clause_index, std::uint64_t visits_delta);

private:
    void insert_below(Pointer& p, int v);
    void prune_below(Pointer& p, const Clause& c, std::size_t matched);

    Pointer root_;
    std::vector<int> inserted_;
    Counters counters_;
    std::uint64_t open_count_ = 1;
    std::optional<std::uint64_t> node_limit_;
};

}  // namespace ctsat
