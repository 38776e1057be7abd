#include "ctsat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ctsat {
namespace {

struct Line {
    std::string_view text;
    int number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            // final line without newline; an empty tail is not a line
            if (start < text.size())
                lines.push_back({text.substr(start), number});
            break;
        }
        lines.push_back({text.substr(start, end - start), number});
        ++number;
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start) toks.push_back(line.substr(start, i - start));
    }
    return toks;
}

int parse_int(std::string_view tok, int line, int column) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + std::string(tok) + "'",
                         line, column);
    return value;
}

}  // namespace

Formula parse_dimacs(std::string_view text) {
    std::vector<Clause> clauses;
    int declared_vars = -1;
    int declared_clauses = -1;
    std::vector<ClauseToken> current;
    bool in_clause = false;
    int clause_open_line = 0;
    int last_line = 1;

    for (const Line& line : split_lines(text)) {
        last_line = line.number;
        auto toks = split_tokens(line.text);
        if (toks.empty()) continue;
        if (toks[0][0] == 'c') continue;
        if (toks[0] == "p") {
            if (declared_vars >= 0)
                throw ParseError("duplicate header", line.number);
            if (toks.size() != 4 || toks[1] != "cnf")
                throw ParseError("malformed header, expected 'p cnf <nvars> <nclauses>'",
                                 line.number);
            declared_vars = parse_int(toks[2], line.number, 3);
            declared_clauses = parse_int(toks[3], line.number, 4);
            if (declared_vars < 0 || declared_clauses < 0)
                throw ParseError("header counts must be nonnegative", line.number);
            continue;
        }
        if (declared_vars < 0)
            throw ParseError("clause data before 'p cnf' header", line.number);
        int column = 0;
        for (std::string_view tok : toks) {
            ++column;
            int code = parse_int(tok, line.number, column);
            if (code == 0) {
                clauses.push_back(Clause::normalized(current));
                current.clear();
                in_clause = false;
                continue;
            }
            int var = code < 0 ? -code : code;
            if (var > declared_vars)
                throw ParseError("literal " + std::string(tok) +
                                     " exceeds declared variable count " +
                                     std::to_string(declared_vars),
                                 line.number, column);
            if (!in_clause) {
                in_clause = true;
                clause_open_line = line.number;
            }
            current.push_back(ClauseToken::lit(code));
        }
    }
    if (declared_vars < 0) throw ParseError("missing 'p cnf' header", last_line);
    if (in_clause)
        throw ParseError("clause missing its 0 terminator", clause_open_line);
    if (static_cast<int>(clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) +
                             " clauses but body has " +
                             std::to_string(clauses.size()),
                         last_line);
    return Formula(std::move(clauses));
}

std::string emit_dimacs(const Formula& f) {
    std::size_t index = 0;
    for (const Clause& c : f.clauses()) {
        bool complementary_pair = c.variables().size() != c.size();
        if (c.tautology() && !complementary_pair)
            throw std::invalid_argument(
                "clause " + std::to_string(index) +
                " is a constant tautology, not expressible in DIMACS");
        ++index;
    }
    int nvars = f.variables().empty() ? 0 : f.variables().back();
    std::ostringstream out;
    out << "p cnf " << nvars << ' ' << f.size() << '\n';
    for (const Clause& c : f.clauses()) {
        for (Literal l : c.literals()) out << l.code() << ' ';
        out << "0\n";
    }
    return out.str();
}

Formula parse_native(std::string_view text) {
    std::vector<Clause> clauses;
    for (const Line& line : split_lines(text)) {
        std::vector<ClauseToken> toks;
        int column = 0;
        for (std::string_view tok : split_tokens(line.text)) {
            ++column;
            if (tok == "#t") {
                toks.push_back(ClauseToken::constant(true));
            } else if (tok == "#f") {
                toks.push_back(ClauseToken::constant(false));
            } else {
                int code = parse_int(tok, line.number, column);
                if (code == 0)
                    throw ParseError("0 is not a literal", line.number, column);
                toks.push_back(ClauseToken::lit(code));
            }
        }
        clauses.push_back(Clause::normalized(toks));
    }
    return Formula(std::move(clauses));
}

std::string emit_native(const Formula& f) {
    std::ostringstream out;
    for (const Clause& c : f.clauses()) {
        bool first = true;
        for (Literal l : c.literals()) {
            if (!first) out << ' ';
            out << l.code();
            first = false;
        }
        auto vars = c.variables();
        bool complementary_pair = vars.size() != c.size();
        if (c.tautology() && !complementary_pair) {
            if (!first) out << ' ';
            out << "#t";
        }
        out << '\n';
    }
    return out.str();
}

Formula load_formula_file(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    if (path.extension() == ".scnf") return parse_native(text);
    if (path.extension() == ".cnf") return parse_dimacs(text);
    throw std::invalid_argument("unknown formula extension '" +
                                path.extension().string() +
                                "' (expected .cnf or .scnf)");
}

void write_formula_file(const std::filesystem::path& path, const Formula& f) {
    if (path.extension() == ".scnf") {
        write_text_file(path, emit_native(f));
    } else if (path.extension() == ".cnf") {
        write_text_file(path, emit_dimacs(f));
    } else {
        throw std::invalid_argument("unknown formula extension '" +
                                    path.extension().string() +
                                    "' (expected .cnf or .scnf)");
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace ctsat
