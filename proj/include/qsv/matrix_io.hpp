#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsv/detail/format.hpp"
#include "qsv/detail/line_lexer.hpp"
#include "qsv/matrix.hpp"

namespace qsv {

/// Raised when a matrix text file is malformed. Carries the 1-based
/// position of the offending token.
class MatrixParseError : public Error {
public:
    MatrixParseError(std::size_t line, std::size_t column,
                     const std::string& message)
        : Error("line " + std::to_string(line) + ", col " +
                std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Reads the matrix text format: a header line `m n`, then m lines of n
/// complex literals `(a,b)`. `#` comments and blank lines are ignored.
inline Matrix read_matrix(std::istream& in) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool have_header = false;
    std::vector<Complex> components;
    std::size_t rows_read = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto lexed = detail::lex_line(line);
        if (const auto* error = std::get_if<detail::LexError>(&lexed)) {
            throw MatrixParseError(line_no, error->column, error->message);
        }
        const auto& tokens = std::get<std::vector<detail::Token>>(lexed);
        if (tokens.empty()) continue;

        if (!have_header) {
            if (tokens.size() != 2 ||
                tokens[0].kind != detail::Token::Kind::Word ||
                tokens[1].kind != detail::Token::Kind::Word) {
                throw MatrixParseError(line_no, tokens[0].column,
                                       "expected header 'm n'");
            }
            if (!detail::parse_count(tokens[0].text, rows) || rows == 0) {
                throw MatrixParseError(line_no, tokens[0].column,
                                       "row count must be a positive integer");
            }
            if (!detail::parse_count(tokens[1].text, cols) || cols == 0) {
                throw MatrixParseError(line_no, tokens[1].column,
                                       "column count must be a positive integer");
            }
            if (rows > max_dimension() || cols > max_dimension()) {
                throw MatrixParseError(line_no, tokens[0].column,
                                       "dimension exceeds limit of " +
                                           std::to_string(max_dimension()));
            }
            have_header = true;
            components.reserve(rows * cols);
            continue;
        }

        if (rows_read == rows) {
            throw MatrixParseError(line_no, tokens[0].column,
                                   "unexpected content after " +
                                       std::to_string(rows) + " rows");
        }
        if (tokens.size() != cols) {
            throw MatrixParseError(line_no, tokens[0].column,
                                   "expected " + std::to_string(cols) +
                                       " complex literals, found " +
                                       std::to_string(tokens.size()));
        }
        for (const auto& token : tokens) {
            if (token.kind != detail::Token::Kind::ComplexLit) {
                throw MatrixParseError(line_no, token.column,
                                       "expected complex literal '(a,b)'");
            }
            components.push_back(token.value);
        }
        ++rows_read;
    }

    if (!have_header) {
        throw MatrixParseError(1, 1, "missing header 'm n'");
    }
    if (rows_read != rows) {
        throw MatrixParseError(line_no + 1, 1,
                               "expected " + std::to_string(rows) +
                                   " rows, found " + std::to_string(rows_read));
    }
    return Matrix(rows, cols, std::move(components));
}

inline Matrix read_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

inline Matrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open matrix file '" + path.string() + "'");
    }
    return read_matrix(in);
}

/// Writes the matrix text format with exact round-trip number spellings.
inline void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            if (j > 1) out << " ";
            out << detail::format_complex_exact(m.at(i, j));
        }
        out << "\n";
    }
}

inline std::string write_matrix_text(const Matrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

} // namespace qsv
