#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ctsat/formula.hpp"

namespace ctsat {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column = 0)
        : std::runtime_error("line " + std::to_string(line) +
                             (column > 0 ? ":" + std::to_string(column) : "") +
                             ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// DIMACS CNF: comment lines `c ...`, header `p cnf <nvars> <nclauses>`,
// clauses as whitespace-separated nonzero signed integers terminated by 0.
// Header counts are validated against the body; duplicate clauses collapse
// (Formula::duplicates_removed records how many). Constants cannot appear.
Formula parse_dimacs(std::string_view text);

// Emits canonical DIMACS: header with nvars = largest variable index, one
// clause per line in canonical literal order. Throws std::invalid_argument
// for a constant-true clause, which DIMACS cannot express.
std::string emit_dimacs(const Formula& f);

// Native SETCNF: one clause per line; tokens are signed integers, `#t`, or
// `#f`; a blank line is the null clause.
Formula parse_native(std::string_view text);
std::string emit_native(const Formula& f);

// Loads a formula file, picking the format by extension:
// .cnf -> DIMACS, .scnf -> native.
Formula load_formula_file(const std::filesystem::path& path);
void write_formula_file(const std::filesystem::path& path, const Formula& f);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ctsat
