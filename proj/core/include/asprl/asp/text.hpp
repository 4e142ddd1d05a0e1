#ifndef ASPRL_ASP_TEXT_HPP
#define ASPRL_ASP_TEXT_HPP

#include <string>
#include <string_view>

#include "asprl/asp/program.hpp"

namespace asprl::asp {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses a ground program from text. One statement per '.', '%' starts a
/// comment. Statements:
///
///   a.                     fact
///   a :- b, not c.         normal rule
///   :- b, not c.           integrity constraint
///   1 { a; b; c } 2 :- d.  choice rule (default bounds: 0 and #candidates)
///
/// Atom names may contain ':', '=', and parenthesised tuples, so timed atoms
/// such as 0:at=(1,2) parse unquoted; commas inside parentheses do not
/// separate body literals. Candidates accept ';' or ',' as separator.
Program parse_program(std::string_view text);

/// Canonical text form, one rule per line; parse_program(serialize_program(p))
/// reproduces the rules of p. Atoms that occur in no rule are not preserved.
std::string serialize_program(const Program& program);

/// Renders an interpretation as "{a, b, c}" with atoms in id order.
std::string format_model(const Program& program, const Interpretation& model);

} // namespace asprl::asp

#endif
