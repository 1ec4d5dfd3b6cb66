#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

#include "corrind/errors.hpp"

namespace corrind {

// Shortest decimal representation that parses back to the same double.
inline std::string format_double(double value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

// Strict full-token double parse; accepts fixed and scientific notation.
inline double parse_double(std::string_view token, const std::string& context) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ParseError(context + ": not a number: '" + std::string(token) + "'");
    }
    return value;
}

inline long long parse_int(std::string_view token, const std::string& context) {
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw ParseError(context + ": not an integer: '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace corrind
