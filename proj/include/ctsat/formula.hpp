#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctsat {

// A literal is a variable (1-based index) with a polarity. The signed
// integer code follows the DIMACS convention: +v is the positive literal,
// -v the complemented one. Canonical literal order is ascending variable
// index with the negative literal before the positive one on ties.
class Literal {
public:
    explicit Literal(int code) : code_(code) {
        if (code == 0) throw std::invalid_argument("literal code must be nonzero");
    }

    static Literal positive(int var) { return Literal(require_var(var)); }
    static Literal negative(int var) { return Literal(-require_var(var)); }

    int var() const { return code_ < 0 ? -code_ : code_; }
    bool is_positive() const { return code_ > 0; }
    Literal complement() const { return Literal(-code_); }
    int code() const { return code_; }

    friend bool operator==(Literal a, Literal b) { return a.code_ == b.code_; }
    friend std::strong_ordering operator<=>(Literal a, Literal b) {
        if (auto c = a.var() <=> b.var(); c != 0) return c;
        return static_cast<int>(a.is_positive()) <=> static_cast<int>(b.is_positive());
    }

    std::string str() const;

private:
    static int require_var(int var) {
        if (var < 1) throw std::invalid_argument("variable index must be >= 1");
        return var;
    }

    int code_;
};

// Raw clause element before normalization: a literal or one of the
// constants true/false.
class ClauseToken {
public:
    static ClauseToken lit(Literal l) { return ClauseToken(l, false, false); }
    static ClauseToken lit(int code) { return lit(Literal(code)); }
    static ClauseToken constant(bool value) {
        return ClauseToken(Literal(1), true, value);
    }

    bool is_literal() const { return !is_constant_; }
    bool is_constant() const { return is_constant_; }
    Literal literal() const {
        if (is_constant_) throw std::logic_error("token is a constant");
        return lit_;
    }
    bool constant_value() const {
        if (!is_constant_) throw std::logic_error("token is a literal");
        return value_;
    }

private:
    ClauseToken(Literal l, bool is_constant, bool value)
        : lit_(l), is_constant_(is_constant), value_(value) {}

    Literal lit_;
    bool is_constant_;
    bool value_;
};

// A clause as a canonical set of literals. Normalization collapses
// duplicate literals, drops the constant false, and raises the tautology
// flag when the input held the constant true or a complementary pair.
// The empty literal set with the flag down is the null clause; with the
// flag up it is the constant-true clause (expressible only in the native
// format).
class Clause {
public:
    Clause() = default;

    static Clause normalized(std::span<const ClauseToken> raw);
    // Literal-only convenience; codes use the DIMACS sign convention.
    static Clause of(std::initializer_list<int> codes);
    static Clause of(std::span<const int> codes);
    static Clause of(std::span<const Literal> lits);

    const std::vector<Literal>& literals() const { return literals_; }
    bool tautology() const { return tautology_; }
    bool is_null() const { return literals_.empty() && !tautology_; }
    std::size_t size() const { return literals_.size(); }

    bool contains(Literal l) const;
    // Set inclusion on the literal sets.
    bool subset_of(const Clause& other) const;
    // Sorted distinct variable indices.
    std::vector<int> variables() const;
    // Exactly one literal per variable of `vars` (sorted), no extras.
    bool fully_populated_over(std::span<const int> vars) const;

    friend bool operator==(const Clause& a, const Clause& b) {
        return a.tautology_ == b.tautology_ && a.literals_ == b.literals_;
    }
    friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

    std::string str() const;

private:
    std::vector<Literal> literals_;
    bool tautology_ = false;
};

Clause normalize_clause(std::span<const ClauseToken> raw);

// A CNF formula as an ordered set of clauses: input order is preserved and
// exact-duplicate clauses are removed (the count is kept as a diagnostic).
// The variable set is the union of the clause variable sets.
class Formula {
public:
    Formula() = default;
    explicit Formula(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return clauses_; }
    const std::vector<int>& variables() const { return variables_; }
    std::size_t size() const { return clauses_.size(); }
    std::size_t duplicates_removed() const { return duplicates_removed_; }
    bool contains(const Clause& c) const;

    // Set equality on the clause sets (order-insensitive).
    friend bool operator==(const Formula& a, const Formula& b);

private:
    std::vector<Clause> clauses_;
    std::vector<int> variables_;
    std::size_t duplicates_removed_ = 0;
};

// Total map from a variable set to truth values.
class Assignment {
public:
    Assignment() = default;

    void set(int var, bool value) { values_[var] = value; }
    bool defined(int var) const { return values_.count(var) != 0; }
    bool value(int var) const;
    bool satisfies(Literal l) const { return value(l.var()) == l.is_positive(); }
    std::size_t size() const { return values_.size(); }
    const std::map<int, bool>& values() const { return values_; }

    // Bit i of `mask` is the value of vars[i]; vars must be sorted, so the
    // smallest variable sits at the least significant bit.
    static Assignment from_mask(std::span<const int> vars, std::uint64_t mask);

    friend bool operator==(const Assignment&, const Assignment&) = default;

    std::string str() const;

private:
    std::map<int, bool> values_;
};

// True iff some literal of `c` is true under `a`. Tautology clauses are
// true under every assignment; the null clause under none.
bool evaluate_clause(const Clause& c, const Assignment& a);

// Conjunction over the clauses; the empty formula evaluates to true.
bool evaluate_formula(const Formula& f, const Assignment& a);

}  // namespace ctsat
