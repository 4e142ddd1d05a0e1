#include "asprl/asp/text.hpp"

#include <cctype>
#include <sstream>

namespace asprl::asp {

namespace {

struct Token {
    enum class Kind { atom, number, implies, comma, semicolon, lbrace, rbrace, dot, not_kw, end };
    Kind kind;
    std::string text;
    std::size_t line;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        std::size_t line = line_;
        if (pos_ >= text_.size()) {
            return {Token::Kind::end, "", line};
        }
        char c = text_[pos_];
        if (c == '.') {
            ++pos_;
            return {Token::Kind::dot, ".", line};
        }
        if (c == ',') {
            ++pos_;
            return {Token::Kind::comma, ",", line};
        }
        if (c == ';') {
            ++pos_;
            return {Token::Kind::semicolon, ";", line};
        }
        if (c == '{') {
            ++pos_;
            return {Token::Kind::lbrace, "{", line};
        }
        if (c == '}') {
            ++pos_;
            return {Token::Kind::rbrace, "}", line};
        }
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            pos_ += 2;
            return {Token::Kind::implies, ":-", line};
        }
        if (is_atom_char(c)) {
            std::string word = scan_word();
            if (word == "not") {
                return {Token::Kind::not_kw, word, line};
            }
            bool all_digits = !word.empty();
            for (char d : word) {
                if (!std::isdigit(static_cast<unsigned char>(d))) {
                    all_digits = false;
                    break;
                }
            }
            return {all_digits ? Token::Kind::number : Token::Kind::atom, word, line};
        }
        throw ParseError(line_, std::string("unexpected character '") + c + "'");
    }

    std::size_t line() const { return line_; }

private:
    static bool is_atom_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
               c == ':' || c == '=' || c == '(' || c == '-' || c == '+';
    }

    // Scans an atom token. Commas and ')' are part of the token only inside
    // parentheses, so tuple values like (1,2) stay in one token while body
    // separators do not. ':' directly followed by '-' ends the token.
    std::string scan_word() {
        std::string word;
        int depth = 0;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '(') {
                ++depth;
            } else if (c == ')') {
                if (depth == 0) {
                    break;
                }
                --depth;
            } else if (c == ',') {
                if (depth == 0) {
                    break;
                }
            } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                break;
            } else if (!is_atom_char(c)) {
                break;
            }
            word.push_back(c);
            ++pos_;
        }
        if (depth != 0) {
            throw ParseError(line_, "unbalanced parentheses in atom '" + word + "'");
        }
        return word;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Program parse() {
        Program program;
        while (current_.kind != Token::Kind::end) {
            parse_statement(program);
        }
        return program;
    }

private:
    void advance() { current_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(current_.line, what); }

    void expect(Token::Kind kind, const char* what) {
        if (current_.kind != kind) {
            fail(std::string("expected ") + what + ", got '" + current_.text + "'");
        }
        advance();
    }

    Literal parse_literal(Program& program) {
        bool negated = false;
        if (current_.kind == Token::Kind::not_kw) {
            negated = true;
            advance();
        }
        if (current_.kind != Token::Kind::atom && current_.kind != Token::Kind::number) {
            fail("expected atom, got '" + current_.text + "'");
        }
        AtomId atom = program.add_atom(current_.text);
        advance();
        return Literal{atom, negated};
    }

    std::vector<Literal> parse_body(Program& program) {
        std::vector<Literal> body;
        body.push_back(parse_literal(program));
        while (current_.kind == Token::Kind::comma) {
            advance();
            body.push_back(parse_literal(program));
        }
        return body;
    }

    void parse_statement(Program& program) {
        if (current_.kind == Token::Kind::implies) {
            // :- body.
            advance();
            std::vector<Literal> body = parse_body(program);
            expect(Token::Kind::dot, "'.'");
            program.add_rule(Rule::constraint(std::move(body)));
            return;
        }

        // A leading number is a choice lower bound when '{' follows,
        // otherwise an (all-digit) atom name.
        std::optional<Token> pending;
        if (current_.kind == Token::Kind::number) {
            pending = current_;
            advance();
            if (current_.kind == Token::Kind::lbrace) {
                parse_choice(program, std::stoi(pending->text));
                return;
            }
        } else if (current_.kind == Token::Kind::lbrace) {
            parse_choice(program, std::nullopt);
            return;
        }

        AtomId head;
        if (pending) {
            head = program.add_atom(pending->text);
        } else {
            if (current_.kind != Token::Kind::atom) {
                fail("expected rule head, got '" + current_.text + "'");
            }
            head = program.add_atom(current_.text);
            advance();
        }
        if (current_.kind == Token::Kind::dot) {
            advance();
            program.add_rule(Rule::fact(head));
            return;
        }
        expect(Token::Kind::implies, "':-' or '.'");
        std::vector<Literal> body = parse_body(program);
        expect(Token::Kind::dot, "'.'");
        program.add_rule(Rule::normal(head, std::move(body)));
    }

    void parse_choice(Program& program, std::optional<int> lower) {
        expect(Token::Kind::lbrace, "'{'");
        std::vector<AtomId> candidates;
        for (;;) {
            if (current_.kind != Token::Kind::atom && current_.kind != Token::Kind::number) {
                fail("expected choice candidate, got '" + current_.text + "'");
            }
            candidates.push_back(program.add_atom(current_.text));
            advance();
            if (current_.kind == Token::Kind::semicolon || current_.kind == Token::Kind::comma) {
                advance();
                continue;
            }
            break;
        }
        expect(Token::Kind::rbrace, "'}'");
        std::optional<int> upper;
        if (current_.kind == Token::Kind::number) {
            upper = std::stoi(current_.text);
            advance();
        }
        std::vector<Literal> body;
        if (current_.kind == Token::Kind::implies) {
            advance();
            body = parse_body(program);
        }
        expect(Token::Kind::dot, "'.'");
        int count = static_cast<int>(candidates.size());
        program.add_rule(Rule::choice_rule(lower.value_or(0), upper.value_or(count),
                                           std::move(candidates), std::move(body)));
    }

    Lexer lexer_;
    Token current_;
};

} // namespace

Program parse_program(std::string_view text) {
    return Parser(text).parse();
}

namespace {

void append_literal(std::ostringstream& out, const Program& program, const Literal& lit) {
    if (lit.negated) {
        out << "not ";
    }
    out << program.atom_name(lit.atom);
}

void append_body(std::ostringstream& out, const Program& program,
                 const std::vector<Literal>& body) {
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        append_literal(out, program, body[i]);
    }
}

} // namespace

std::string serialize_program(const Program& program) {
    std::ostringstream out;
    for (const Rule& rule : program.rules()) {
        if (rule.is_constraint()) {
            out << ":- ";
            append_body(out, program, rule.body);
        } else if (rule.is_normal()) {
            out << program.atom_name(rule.head_atom());
            if (!rule.body.empty()) {
                out << " :- ";
                append_body(out, program, rule.body);
            }
        } else {
            const ChoiceHead& head = rule.choice();
            out << head.lower << " { ";
            for (std::size_t i = 0; i < head.candidates.size(); ++i) {
                if (i > 0) {
                    out << "; ";
                }
                out << program.atom_name(head.candidates[i]);
            }
            out << " } " << head.upper;
            if (!rule.body.empty()) {
                out << " :- ";
                append_body(out, program, rule.body);
            }
        }
        out << ".\n";
    }
    return out.str();
}

std::string format_model(const Program& program, const Interpretation& model) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < model.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << program.atom_name(model[i]);
    }
    out << '}';
    return out.str();
}

} // namespace asprl::asp
