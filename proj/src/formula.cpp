#include "ctsat/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ctsat {

std::string Literal::str() const {
    return (code_ < 0 ? "-x" : "x") + std::to_string(var());
}

Clause Clause::normalized(std::span<const ClauseToken> raw) {
    Clause c;
    for (const ClauseToken& tok : raw) {
        if (tok.is_constant()) {
            if (tok.constant_value()) c.tautology_ = true;
            // the constant false is the identity of disjunction: dropped
            continue;
        }
        c.literals_.push_back(tok.literal());
    }
    std::sort(c.literals_.begin(), c.literals_.end());
    c.literals_.erase(std::unique(c.literals_.begin(), c.literals_.end()),
                      c.literals_.end());
    for (std::size_t i = 0; i + 1 < c.literals_.size(); ++i) {
        if (c.literals_[i].var() == c.literals_[i + 1].var()) {
            c.tautology_ = true;  // complementary pair survives dedup
            break;
        }
    }
    return c;
}

Clause Clause::of(std::span<const Literal> lits) {
    std::vector<ClauseToken> toks;
    toks.reserve(lits.size());
    for (Literal l : lits) toks.push_back(ClauseToken::lit(l));
    return normalized(toks);
}

Clause Clause::of(std::span<const int> codes) {
    std::vector<ClauseToken> toks;
    toks.reserve(codes.size());
    for (int code : codes) toks.push_back(ClauseToken::lit(code));
    return normalized(toks);
}

Clause Clause::of(std::initializer_list<int> codes) {
    return of(std::span<const int>(codes.begin(), codes.size()));
}

Clause normalize_clause(std::span<const ClauseToken> raw) {
    return Clause::normalized(raw);
}

bool Clause::contains(Literal l) const {
    return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::subset_of(const Clause& other) const {
    return std::includes(other.literals_.begin(), other.literals_.end(),
                         literals_.begin(), literals_.end());
}

std::vector<int> Clause::variables() const {
    std::vector<int> vars;
    vars.reserve(literals_.size());
    for (Literal l : literals_) vars.push_back(l.var());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Clause::fully_populated_over(std::span<const int> vars) const {
    if (tautology_ || literals_.size() != vars.size()) return false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (literals_[i].var() != vars[i]) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
    if (auto c = std::lexicographical_compare_three_way(
            a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
            b.literals_.end());
        c != 0)
        return c;
    return static_cast<int>(a.tautology_) <=> static_cast<int>(b.tautology_);
}

std::string Clause::str() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if (i) out << ", ";
        out << literals_[i].str();
    }
    if (tautology_) out << (literals_.empty() ? "true" : ", true");
    out << '}';
    return out.str();
}

Formula::Formula(std::vector<Clause> clauses) {
    std::set<Clause> seen;
    for (Clause& c : clauses) {
        if (!seen.insert(c).second) {
            ++duplicates_removed_;
            continue;
        }
        for (int v : c.variables()) variables_.push_back(v);
        clauses_.push_back(std::move(c));
    }
    std::sort(variables_.begin(), variables_.end());
    variables_.erase(std::unique(variables_.begin(), variables_.end()),
                     variables_.end());
}

bool Formula::contains(const Clause& c) const {
    return std::find(clauses_.begin(), clauses_.end(), c) != clauses_.end();
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.clauses_.size() != b.clauses_.size()) return false;
    auto sa = a.clauses_;
    auto sb = b.clauses_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

bool Assignment::value(int var) const {
    auto it = values_.find(var);
    if (it == values_.end())
        throw std::logic_error("assignment undefined on variable x" +
                               std::to_string(var));
    return it->second;
}

Assignment Assignment::from_mask(std::span<const int> vars, std::uint64_t mask) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i)
        a.set(vars[i], (mask >> i) & 1u);
    return a;
}

std::string Assignment::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [var, val] : values_) {
        if (!first) out << ' ';
        out << 'x' << var << '=' << (val ? "true" : "false");
        first = false;
    }
    return out.str();
}

bool evaluate_clause(const Clause& c, const Assignment& a) {
    if (c.tautology()) return true;
    for (Literal l : c.literals())
        if (a.satisfies(l)) return true;
    return false;
}

bool evaluate_formula(const Formula& f, const Assignment& a) {
    for (const Clause& c : f.clauses())
        if (!evaluate_clause(c, a)) return false;
    return true;
}

}  // namespace ctsat
