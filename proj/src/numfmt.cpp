#include "odd/numfmt.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace odd {

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc())
        throw std::runtime_error("failed to format double");
    return std::string(buf, end);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double_token(std::string_view tok) {
    tok = trim(tok);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad real number: '" + std::string(tok) + "'");
    return v;
}

long long parse_int_token(std::string_view tok) {
    tok = trim(tok);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad integer: '" + std::string(tok) + "'");
    return v;
}

} // namespace odd
