#ifndef ASPRL_LANG_PARSER_HPP
#define ASPRL_LANG_PARSER_HPP

#include <string_view>

#include "asprl/lang/domain.hpp"

namespace asprl::lang {

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the domain-file format: one statement per line, each terminated by
/// '.', with '%' comments. Statements:
///
///   fluent at : cell(0..9, 0..9).        cell-valued fluent, values "(x,y)"
///   fluent door : {open, closed}.        enumerated fluent
///   action up.
///   caused f=v if g=w, h=u.              static law
///   up causes at=(X,Y+1) if at=(X,Y).    fluent dynamic law
///   up causes at=(X,Y+1) if f=v after at=(X,Y).
///   initially at=(0,0).
///   goal at=(9,9).
///   never at=(3,3).                      forbidden at every time step
///
/// In `causes` statements a lone `if` clause is the current-state
/// precondition (the usual action-language abbreviation); when `after` is
/// also present, `if` is the next-state condition and `after` the
/// current-state one. Uppercase identifiers inside cell terms are variables,
/// grounded over every substitution that keeps all cell coordinates in
/// range; `never` conjunctions ground the same way, while `initially` and
/// `goal` must be variable-free. Constants must be declared before use.
ActionDescription parse_domain(std::string_view text);

} // namespace asprl::lang

#endif
