#ifndef ASPRL_CSV_HPP
#define ASPRL_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace asprl {

/// Quotes `field` if it contains a comma, quote or newline; otherwise returns
/// it unchanged.
std::string csv_escape(std::string_view field);

/// Splits one CSV record into fields, honouring double-quoted fields with
/// embedded commas and doubled quotes.
std::vector<std::string> csv_split(std::string_view line);

/// Formats a double with enough digits to round-trip, without trailing
/// zero noise ("%.17g" semantics trimmed via shortest round-trip probing).
std::string format_double(double value);

} // namespace asprl

#endif
