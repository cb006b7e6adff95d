#pragma once

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qsv/complex.hpp"

namespace qsv::detail {

// Shortest decimal spelling that parses back to exactly the same double.
inline std::string format_shortest(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

// Fixed number of significant digits, e.g. for human-readable reports.
inline std::string format_significant(double value, int digits) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
}

// Nearest double representable with the given number of significant
// decimal digits.
inline double round_significant(double value, int digits) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return std::strtod(buffer, nullptr);
}

// "(a,b)" with exact round-trip spellings, as used in files.
inline std::string format_complex_exact(const Complex& z) {
    return "(" + format_shortest(z.re) + "," + format_shortest(z.im) + ")";
}

// "(a,b)" at reduced precision, as used in text reports.
inline std::string format_complex_brief(const Complex& z, int digits = 6) {
    return "(" + format_significant(z.re, digits) + "," +
           format_significant(z.im, digits) + ")";
}

} // namespace qsv::detail
