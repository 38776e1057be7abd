#include "ctsat/clause_tree.hpp"

#include <algorithm>
#include <sstream>

namespace ctsat {
namespace {

struct SubtreeTally {
    std::uint64_t nodes = 0;
    std::uint64_t opens = 0;
};

SubtreeTally tally_subtree(const TreeNode& nd) {
    SubtreeTally t{1, 0};
    for (const Pointer* p : {&nd.left, &nd.right}) {
        switch (p->state) {
            case PointerState::open: ++t.opens; break;
            case PointerState::null: break;
            case PointerState::child: {
                SubtreeTally sub = tally_subtree(*p->node);
                t.nodes += sub.nodes;
                t.opens += sub.opens;
                break;
            }
        }
    }
    return t;
}

}  // namespace

ClauseTree::ClauseTree(std::optional<std::uint64_t> node_limit)
    : node_limit_(node_limit) {
    if (node_limit_ && *node_limit_ == 0)
        throw std::invalid_argument("node limit must be >= 1");
    counters_.current_nodes_incl_root = 1;  // the root itself
    counters_.peak_nodes_incl_root = 1;
}

void ClauseTree::insert_variable(int v) {
    if (v < 1) throw std::invalid_argument("variable index must be >= 1");
    if (contains_variable(v))
        throw std::logic_error("variable x" + std::to_string(v) +
                               " is already in the tree");
    if (!has_open_pointer())
        throw std::logic_error("insert_variable with no open pointer; "
                               "the caller must reject first");
    insert_below(root_, v);
    inserted_.push_back(v);
    counters_.peak_nodes_incl_root = std::max(counters_.peak_nodes_incl_root,
                                              counters_.current_nodes_incl_root);
}

void ClauseTree::insert_below(Pointer& p, int v) {
    switch (p.state) {
        case PointerState::null:
            break;
        case PointerState::open:
            p.node = std::make_unique<TreeNode>(v);
            p.state = PointerState::child;
            ++counters_.nodes_created;
            ++counters_.current_nodes_incl_root;
            ++open_count_;  // one open pointer replaced by two
            if (node_limit_ && counters_.current_nodes_incl_root > *node_limit_) {
                counters_.peak_nodes_incl_root =
                    std::max(counters_.peak_nodes_incl_root,
                             counters_.current_nodes_incl_root);
                throw ResourceLimitError(*node_limit_, counters_);
            }
            break;
        case PointerState::child:
            insert_below(p.node->left, v);
            insert_below(p.node->right, v);
            break;
    }
}

std::uint64_t ClauseTree::prune(const Clause& c) {
    if (c.is_null()) throw std::logic_error("cannot prune the null clause");
    if (c.tautology()) throw std::logic_error("cannot prune a tautology clause");
    for (int v : c.variables())
        if (!contains_variable(v))
            throw std::logic_error("prune clause mentions x" + std::to_string(v) +
                                   ", which is not in the tree");
    std::uint64_t before = counters_.prune_pointer_visits;
    prune_below(root_, c, 0);
    return counters_.prune_pointer_visits - before;
}

void ClauseTree::prune_below(Pointer& p, const Clause& c, std::size_t matched) {
    ++counters_.prune_pointer_visits;
    if (matched == c.size()) {
        // path clause supersets c: close the pointer, drop everything below
        switch (p.state) {
            case PointerState::open:
                --open_count_;
                break;
            case PointerState::child: {
                SubtreeTally t = tally_subtree(*p.node);
                counters_.nodes_deleted += t.nodes;
                counters_.current_nodes_incl_root -= t.nodes;
                open_count_ -= t.opens;
                p.node.reset();
                break;
            }
            case PointerState::null:
                break;
        }
        p.state = PointerState::null;
        return;
    }
    if (p.state != PointerState::child) return;
    TreeNode& nd = *p.node;
    std::size_t left_matched =
        matched + (c.contains(Literal::negative(nd.label)) ? 1 : 0);
    std::size_t right_matched =
        matched + (c.contains(Literal::positive(nd.label)) ? 1 : 0);
    prune_below(nd.left, c, left_matched);
    prune_below(nd.right, c, right_matched);
}

namespace {

void collect_open_paths(const Pointer& p, std::vector<Literal>& path,
                        std::vector<Clause>& out) {
    switch (p.state) {
        case PointerState::open:
            out.push_back(Clause::of(std::span<const Literal>(path)));
            break;
        case PointerState::null:
            break;
        case PointerState::child: {
            const TreeNode& nd = *p.node;
            path.push_back(Literal::negative(nd.label));
            collect_open_paths(nd.left, path, out);
            path.back() = Literal::positive(nd.label);
            collect_open_paths(nd.right, path, out);
            path.pop_back();
            break;
        }
    }
}

}  // namespace

std::vector<Clause> ClauseTree::open_paths() const {
    std::vector<Clause> out;
    std::vector<Literal> path;
    collect_open_paths(root_, path, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool ClauseTree::contains_variable(int v) const {
    return std::find(inserted_.begin(), inserted_.end(), v) != inserted_.end();
}

namespace {

std::uint64_t count_pointers(const Pointer& p) {
    if (p.state != PointerState::child) return 1;
    return 1 + count_pointers(p.node->left) + count_pointers(p.node->right);
}

void emit_dot_pointer(std::ostringstream& out, const Pointer& p,
                      const std::string& parent_id, const std::string& path,
                      const std::string& edge_label) {
    std::string attrs = edge_label.empty() ? "" : " [label=\"" + edge_label + "\"]";
    switch (p.state) {
        case PointerState::open: {
            std::string id = "p" + path + "_open";
            out << "  " << id << " [shape=plaintext, label=\"open\"];\n";
            out << "  " << parent_id << " -> " << id
                << (edge_label.empty() ? " [style=dashed]"
                                       : " [label=\"" + edge_label +
                                             "\", style=dashed]")
                << ";\n";
            break;
        }
        case PointerState::null: {
            std::string id = "p" + path + "_null";
            out << "  " << id << " [shape=box, label=\"null\"];\n";
            out << "  " << parent_id << " -> " << id << attrs << ";\n";
            break;
        }
        case PointerState::child: {
            const TreeNode& nd = *p.node;
            std::string id = path.empty() ? "n" : "n" + path;
            out << "  " << id << " [label=\"x" << nd.label << "\"];\n";
            out << "  " << parent_id << " -> " << id << attrs << ";\n";
            emit_dot_pointer(out, nd.left, id, path + "L",
                             "-x" + std::to_string(nd.label));
            emit_dot_pointer(out, nd.right, id, path + "R",
                             "x" + std::to_string(nd.label));
            break;
        }
    }
}

}  // namespace

std::uint64_t ClauseTree::pointer_count() const { return count_pointers(root_); }

std::string ClauseTree::export_dot() const {
    std::ostringstream out;
    out << "digraph clause_tree {\n";
    out << "  node [shape=circle];\n";
    out << "  root [shape=point];\n";
    emit_dot_pointer(out, root_, "root", "", "");
    out << "}\n";
    return out.str();
}

void ClauseTree::note_clause_snapshot(std::size_t clause_index,
                                      std::uint64_t visits_delta) {
    counters_.per_clause.push_back({clause_index,
                                    counters_.peak_nodes_incl_root,
                                    counters_.current_nodes_incl_root,
                                    visits_delta});
}

}  // namespace ctsat
