#pragma once

#include <string>
#include <string_view>

namespace odd {

// Shortest decimal form that parses back to the identical double
// (std::to_chars general format). Keeps written matrices bit-exact under
// round trips while printing friendly values like "6.3".
std::string format_double(double x);

// Locale-independent strict parse of a full token. Throws
// std::invalid_argument with the offending token on failure.
double parse_double_token(std::string_view tok);
long long parse_int_token(std::string_view tok);

std::string_view trim(std::string_view s);

} // namespace odd
