#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsv/complex.hpp"

namespace qsv::detail {

// Line-level tokens shared by the matrix text format and the circuit
// language. A '#' starts a comment that runs to the end of the line.
struct Token {
    enum class Kind { Word, ComplexLit, LBracket, RBracket };
    Kind kind;
    std::string text;       // raw spelling (Word tokens)
    Complex value;          // parsed value (ComplexLit tokens)
    std::size_t column = 1; // 1-based start column
};

struct LexError {
    std::size_t column;
    std::string message;
};

using LexResult = std::variant<std::vector<Token>, LexError>;

// Parses a decimal literal with optional sign/fraction/exponent.
// Returns false on malformed or non-finite input.
inline bool parse_decimal(std::string_view text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return false;
    if (!std::isfinite(value)) return false;
    out = value;
    return true;
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

inline bool is_word_char(char c) {
    return !is_space(c) && c != '(' && c != ')' && c != '[' && c != ']' &&
           c != '#';
}

// Tokenizes one line. Complex literals are written "(a,b)"; whitespace is
// permitted around the two numbers inside the parentheses.
inline LexResult lex_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const char c = line[pos];
        if (is_space(c)) {
            ++pos;
            continue;
        }
        if (c == '#') break;
        const std::size_t column = pos + 1;
        if (c == '[') {
            tokens.push_back({Token::Kind::LBracket, "[", {}, column});
            ++pos;
            continue;
        }
        if (c == ']') {
            tokens.push_back({Token::Kind::RBracket, "]", {}, column});
            ++pos;
            continue;
        }
        if (c == ')') {
            return LexError{column, "unmatched ')'"};
        }
        if (c == '(') {
            const std::size_t close = line.find(')', pos);
            if (close == std::string_view::npos) {
                return LexError{column, "unterminated complex literal"};
            }
            std::string_view body = line.substr(pos + 1, close - pos - 1);
            const std::size_t comma = body.find(',');
            if (comma == std::string_view::npos) {
                return LexError{column,
                                "complex literal needs two components (a,b)"};
            }
            auto trim = [](std::string_view s) {
                while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
                while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
                return s;
            };
            const std::string_view re_text = trim(body.substr(0, comma));
            const std::string_view im_text = trim(body.substr(comma + 1));
            double re = 0.0;
            double im = 0.0;
            if (!parse_decimal(re_text, re) || !parse_decimal(im_text, im)) {
                return LexError{column, "malformed complex literal '(" +
                                            std::string(body) + ")'"};
            }
            tokens.push_back(
                {Token::Kind::ComplexLit, "", Complex(re, im), column});
            pos = close + 1;
            continue;
        }
        std::size_t end = pos;
        while (end < line.size() && is_word_char(line[end])) ++end;
        tokens.push_back(
            {Token::Kind::Word, std::string(line.substr(pos, end - pos)), {},
             column});
        pos = end;
    }
    return tokens;
}

// Parses a positive integer token in decimal.
inline bool parse_count(std::string_view text, std::size_t& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return false;
    out = value;
    return true;
}

} // namespace qsv::detail
