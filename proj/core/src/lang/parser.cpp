#include "asprl/lang/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace asprl::lang {

namespace {

// A cell coordinate expression: optional variable plus integer offset.
struct Expr {
    std::optional<std::string> var;
    int offset = 0;
};

// An unground value: either a plain symbol or a tuple of expressions.
struct TermValue {
    bool is_tuple = false;
    std::string symbol;
    std::vector<Expr> elements;
};

struct TermEq {
    std::string fluent;
    TermValue value;
};

std::string format_cell(const std::vector<int>& coords) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << coords[i];
    }
    out << ')';
    return out.str();
}

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool eat_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) {
            return false;
        }
        std::size_t after = pos_ + word.size();
        if (after < text_.size() && is_ident_char(text_[after])) {
            return false;
        }
        pos_ = after;
        return true;
    }

    std::string identifier(const char* what) {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() &&
            (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                ++pos_;
            }
        }
        if (start == pos_) {
            fail(std::string("expected ") + what);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            ++pos_;
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) {
            fail("expected integer");
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError(line_, pos_ + 1, what);
    }

    std::size_t line() const { return line_; }

private:
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

class DomainParser {
public:
    explicit DomainParser(std::string_view text) : text_(text) {}

    ActionDescription parse() {
        std::size_t line_no = 0;
        std::size_t begin = 0;
        while (begin <= text_.size()) {
            std::size_t end = text_.find('\n', begin);
            std::string_view line = text_.substr(
                begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
            ++line_no;
            parse_line(line, line_no);
            if (end == std::string_view::npos) {
                break;
            }
            begin = end + 1;
        }
        if (d_.fluents.empty()) {
            throw SyntaxError(line_no, 1, "no fluents declared");
        }
        d_.validate();
        return std::move(d_);
    }

private:
    void parse_line(std::string_view raw, std::size_t line_no) {
        std::string_view line = raw.substr(0, raw.find('%'));
        while (!line.empty() &&
               std::isspace(static_cast<unsigned char>(line.back()))) {
            line.remove_suffix(1);
        }
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) {
            return;
        }
        if (line.back() != '.') {
            throw SyntaxError(line_no, line.size(), "statement must end with '.'");
        }
        line.remove_suffix(1);
        LineCursor cursor(line, line_no);
        parse_statement(cursor);
        if (!cursor.at_end()) {
            cursor.fail("trailing input after statement");
        }
    }

    void parse_statement(LineCursor& cursor) {
        if (cursor.eat_word("fluent")) {
            parse_fluent(cursor);
        } else if (cursor.eat_word("action")) {
            d_.actions.push_back({cursor.identifier("action name")});
        } else if (cursor.eat_word("caused")) {
            parse_static_law(cursor);
        } else if (cursor.eat_word("initially")) {
            d_.initial_condition = ground_unique(parse_conjunction(cursor), cursor, "initially");
        } else if (cursor.eat_word("goal")) {
            d_.goal_condition = ground_unique(parse_conjunction(cursor), cursor, "goal");
        } else if (cursor.eat_word("never")) {
            parse_never(cursor);
        } else {
            parse_dynamic_law(cursor);
        }
    }

    void parse_fluent(LineCursor& cursor) {
        FluentConstant fluent;
        fluent.name = cursor.identifier("fluent name");
        cursor.expect(':');
        if (cursor.eat('{')) {
            for (;;) {
                fluent.values.push_back(cursor.identifier("domain value"));
                if (!cursor.eat(',')) {
                    break;
                }
            }
            cursor.expect('}');
        } else if (cursor.eat_word("cell")) {
            cursor.expect('(');
            std::vector<std::pair<int, int>> bounds;
            for (;;) {
                int lo = cursor.integer();
                cursor.expect('.');
                cursor.expect('.');
                int hi = cursor.integer();
                if (lo > hi) {
                    cursor.fail("empty cell range");
                }
                bounds.emplace_back(lo, hi);
                if (!cursor.eat(',')) {
                    break;
                }
            }
            cursor.expect(')');
            std::vector<int> coords(bounds.size());
            enumerate_cells(bounds, 0, coords, fluent.values);
            cell_bounds_[fluent.name] = std::move(bounds);
        } else {
            cursor.fail("expected '{' value list or cell(...) domain");
        }
        d_.fluents.push_back(std::move(fluent));
    }

    static void enumerate_cells(const std::vector<std::pair<int, int>>& bounds, std::size_t slot,
                                std::vector<int>& coords, std::vector<std::string>& out) {
        if (slot == bounds.size()) {
            out.push_back(format_cell(coords));
            return;
        }
        for (int v = bounds[slot].first; v <= bounds[slot].second; ++v) {
            coords[slot] = v;
            enumerate_cells(bounds, slot + 1, coords, out);
        }
    }

    Expr parse_expr(LineCursor& cursor) {
        Expr expr;
        if (std::isalpha(static_cast<unsigned char>(cursor.peek()))) {
            std::string name = cursor.identifier("variable");
            if (!std::isupper(static_cast<unsigned char>(name[0]))) {
                cursor.fail("cell coordinate must be an integer or an uppercase variable");
            }
            expr.var = name;
            if (cursor.eat('+')) {
                expr.offset = cursor.integer();
            } else if (cursor.eat('-')) {
                expr.offset = -cursor.integer();
            }
        } else {
            expr.offset = cursor.integer();
        }
        return expr;
    }

    TermEq parse_term(LineCursor& cursor) {
        TermEq term;
        term.fluent = cursor.identifier("fluent name");
        if (!d_.find_fluent(term.fluent)) {
            throw UndeclaredConstant("line " + std::to_string(line_of(cursor)) +
                                     ": undeclared fluent '" + term.fluent + "'");
        }
        cursor.expect('=');
        if (cursor.eat('(')) {
            term.value.is_tuple = true;
            for (;;) {
                term.value.elements.push_back(parse_expr(cursor));
                if (!cursor.eat(',')) {
                    break;
                }
            }
            cursor.expect(')');
            if (!cell_bounds_.count(term.fluent)) {
                cursor.fail("fluent '" + term.fluent + "' has no cell domain");
            }
        } else {
            term.value.symbol = cursor.identifier("domain value");
            if (std::isupper(static_cast<unsigned char>(term.value.symbol[0]))) {
                cursor.fail("variables are allowed only inside cell terms");
            }
        }
        return term;
    }

    std::vector<TermEq> parse_conjunction(LineCursor& cursor) {
        std::vector<TermEq> terms;
        terms.push_back(parse_term(cursor));
        while (cursor.eat(',')) {
            terms.push_back(parse_term(cursor));
        }
        return terms;
    }

    void parse_static_law(LineCursor& cursor) {
        TermEq head = parse_term(cursor);
        std::vector<TermEq> condition;
        if (cursor.eat_word("if")) {
            condition = parse_conjunction(cursor);
        }
        std::vector<TermEq> all{head};
        all.insert(all.end(), condition.begin(), condition.end());
        ground(all, cursor, [&](const std::vector<FluentEq>& ground_terms) {
            StaticLaw law;
            law.head = ground_terms[0];
            law.condition.assign(ground_terms.begin() + 1, ground_terms.end());
            d_.static_laws.push_back(std::move(law));
        });
    }

    void parse_dynamic_law(LineCursor& cursor) {
        std::string action = cursor.identifier("action name");
        if (!d_.find_action(action)) {
            throw UndeclaredConstant("line " + std::to_string(line_of(cursor)) +
                                     ": undeclared action '" + action + "'");
        }
        if (!cursor.eat_word("causes")) {
            cursor.fail("expected 'causes'");
        }
        TermEq head = parse_term(cursor);
        std::vector<TermEq> if_part;
        std::vector<TermEq> after_part;
        bool have_if = false;
        bool have_after = false;
        if (cursor.eat_word("if")) {
            have_if = true;
            if_part = parse_conjunction(cursor);
        }
        if (cursor.eat_word("after")) {
            have_after = true;
            after_part = parse_conjunction(cursor);
        }
        // A lone `if` abbreviates the current-state precondition; with both
        // clauses present, `if` is the next-state condition.
        std::vector<TermEq> condition;
        std::vector<TermEq> precondition;
        if (have_if && !have_after) {
            precondition = std::move(if_part);
        } else {
            condition = std::move(if_part);
            precondition = std::move(after_part);
        }

        std::vector<TermEq> all{head};
        std::size_t cond_end = 1 + condition.size();
        all.insert(all.end(), condition.begin(), condition.end());
        all.insert(all.end(), precondition.begin(), precondition.end());
        ground(all, cursor, [&](const std::vector<FluentEq>& ground_terms) {
            DynamicLaw law;
            law.head.push_back(ground_terms[0]);
            law.condition.assign(ground_terms.begin() + 1, ground_terms.begin() + cond_end);
            law.precondition_fluents.assign(ground_terms.begin() + cond_end, ground_terms.end());
            law.precondition_actions.push_back(action);
            d_.dynamic_laws.push_back(std::move(law));
        });
    }

    void parse_never(LineCursor& cursor) {
        std::vector<TermEq> terms = parse_conjunction(cursor);
        ground(terms, cursor, [&](const std::vector<FluentEq>& ground_terms) {
            d_.never_conditions.push_back(ground_terms);
        });
    }

    std::vector<FluentEq> ground_unique(const std::vector<TermEq>& terms, LineCursor& cursor,
                                        const char* what) {
        for (const TermEq& term : terms) {
            for (const Expr& expr : term.value.elements) {
                if (expr.var) {
                    cursor.fail(std::string(what) + " must be variable-free");
                }
            }
        }
        std::vector<std::vector<FluentEq>> instances;
        ground(terms, cursor,
               [&](const std::vector<FluentEq>& ground_terms) { instances.push_back(ground_terms); });
        return instances.at(0);
    }

    // Grounds a term list over every variable substitution keeping all cell
    // coordinates in range. Instances where a constant coordinate falls out
    // of range are skipped, except that a fully ground statement with an
    // out-of-range coordinate is an error.
    template <typename Emit>
    void ground(const std::vector<TermEq>& terms, LineCursor& cursor, Emit emit) {
        // Variable ranges: intersect [lo - offset, hi - offset] over every
        // occurrence of the variable in a cell slot.
        std::map<std::string, std::pair<int, int>> ranges;
        bool has_vars = false;
        for (const TermEq& term : terms) {
            if (!term.value.is_tuple) {
                continue;
            }
            const auto& bounds = cell_bounds_.at(term.fluent);
            if (term.value.elements.size() != bounds.size()) {
                cursor.fail("cell term arity mismatch for fluent '" + term.fluent + "'");
            }
            for (std::size_t slot = 0; slot < bounds.size(); ++slot) {
                const Expr& expr = term.value.elements[slot];
                if (!expr.var) {
                    continue;
                }
                has_vars = true;
                int lo = bounds[slot].first - expr.offset;
                int hi = bounds[slot].second - expr.offset;
                auto [it, inserted] = ranges.emplace(*expr.var, std::make_pair(lo, hi));
                if (!inserted) {
                    it->second.first = std::max(it->second.first, lo);
                    it->second.second = std::min(it->second.second, hi);
                }
            }
        }

        std::vector<std::string> vars;
        for (const auto& [name, range] : ranges) {
            if (range.first > range.second) {
                return; // no in-range substitution
            }
            vars.push_back(name);
        }

        std::map<std::string, int> assignment;
        bool emitted_any = false;
        instantiate(terms, vars, 0, ranges, assignment, emitted_any, emit);
        if (!has_vars && !emitted_any) {
            throw ValueOutsideDomain("line " + std::to_string(line_of(cursor)) +
                                     ": cell coordinate out of range");
        }
    }

    template <typename Emit>
    void instantiate(const std::vector<TermEq>& terms, const std::vector<std::string>& vars,
                     std::size_t index, const std::map<std::string, std::pair<int, int>>& ranges,
                     std::map<std::string, int>& assignment, bool& emitted_any, Emit emit) {
        if (index < vars.size()) {
            auto range = ranges.at(vars[index]);
            for (int v = range.first; v <= range.second; ++v) {
                assignment[vars[index]] = v;
                instantiate(terms, vars, index + 1, ranges, assignment, emitted_any, emit);
            }
            return;
        }
        std::vector<FluentEq> ground_terms;
        ground_terms.reserve(terms.size());
        for (const TermEq& term : terms) {
            if (!term.value.is_tuple) {
                ground_terms.push_back({term.fluent, term.value.symbol});
                continue;
            }
            const auto& bounds = cell_bounds_.at(term.fluent);
            std::vector<int> coords(term.value.elements.size());
            for (std::size_t slot = 0; slot < coords.size(); ++slot) {
                const Expr& expr = term.value.elements[slot];
                coords[slot] = (expr.var ? assignment.at(*expr.var) : 0) + expr.offset;
                if (coords[slot] < bounds[slot].first || coords[slot] > bounds[slot].second) {
                    return; // constant coordinate out of range for this instance
                }
            }
            ground_terms.push_back({term.fluent, format_cell(coords)});
        }
        emitted_any = true;
        emit(ground_terms);
    }

    static std::size_t line_of(const LineCursor& cursor) { return cursor.line(); }

    std::string_view text_;
    ActionDescription d_;
    std::map<std::string, std::vector<std::pair<int, int>>> cell_bounds_;
};

} // namespace

ActionDescription parse_domain(std::string_view text) {
    return DomainParser(text).parse();
}

} // namespace asprl::lang
