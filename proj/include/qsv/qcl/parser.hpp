#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsv/detail/line_lexer.hpp"
#include "qsv/matrix.hpp"
#include "qsv/qcl/diagnostic.hpp"
#include "qsv/qcl/program.hpp"

namespace qsv::qcl {

struct ParseResult {
    std::optional<Program> program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value() && diagnostics.empty(); }
};

namespace detail {

using qsv::detail::Token;

// The grammar is line-oriented with a fixed prologue: the first directive
// must be `dim`, the second `state`, and a `measure` directive ends the
// program. The parser recovers per line so one bad directive does not
// hide later problems, but dimension-dependent checks are skipped once
// the dimension itself failed to parse.
class ParserState {
public:
    explicit ParserState(std::string_view text) : text_(text) {}

    ParseResult run() {
        std::size_t line_start = 0;
        while (line_start <= text_.size()) {
            const std::size_t newline = text_.find('\n', line_start);
            const std::size_t line_end =
                (newline == std::string_view::npos) ? text_.size() : newline;
            ++line_no_;
            handle_line(text_.substr(line_start, line_end - line_start));
            if (newline == std::string_view::npos) break;
            line_start = newline + 1;
        }
        finish();

        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        if (result.diagnostics.empty()) result.program = std::move(program_);
        return result;
    }

private:
    enum class Expect { Dim, State, Body };

    void error(DiagCode code, std::size_t column, std::string message) {
        diagnostics_.push_back({code, line_no_, column, std::move(message)});
    }

    void handle_line(std::string_view line) {
        auto lexed = qsv::detail::lex_line(line);
        if (const auto* lex_error = std::get_if<qsv::detail::LexError>(&lexed)) {
            error(DiagCode::ParseError, lex_error->column, lex_error->message);
            recover_past(line);
            return;
        }
        const auto& tokens = std::get<std::vector<Token>>(lexed);
        if (tokens.empty()) return;

        if (tokens[0].kind != Token::Kind::Word) {
            error(DiagCode::ParseError, tokens[0].column,
                  "expected a directive keyword");
            return;
        }
        const std::string& keyword = tokens[0].text;
        if (seen_measure_) {
            error(DiagCode::MisplacedDirective, tokens[0].column,
                  "no directive may follow measure");
            return;
        }
        if (keyword == "dim") {
            handle_dim(tokens);
        } else if (keyword == "state") {
            handle_state(tokens);
        } else if (keyword == "gate") {
            handle_gate(tokens);
        } else if (keyword == "apply") {
            handle_apply(tokens);
        } else if (keyword == "measure") {
            handle_measure(tokens);
        } else {
            error(DiagCode::ParseError, tokens[0].column,
                  "unknown directive '" + keyword + "'");
        }
    }

    void handle_dim(const std::vector<Token>& tokens) {
        if (expect_ != Expect::Dim) {
            error(DiagCode::MisplacedDirective, tokens[0].column,
                  "dim must be the first directive and appear once");
            return;
        }
        expect_ = Expect::State; // recover past a bad dim value
        program_.dim_span = {line_no_, tokens[0].column};
        if (tokens.size() != 2 || tokens[1].kind != Token::Kind::Word) {
            error(DiagCode::ParseError, tokens[0].column,
                  "usage: dim <n>");
            return;
        }
        std::size_t dim = 0;
        if (!qsv::detail::parse_count(tokens[1].text, dim) || dim == 0) {
            error(DiagCode::ParseError, tokens[1].column,
                  "dim must be a positive integer");
            return;
        }
        if (dim > max_dimension()) {
            error(DiagCode::ParseError, tokens[1].column,
                  "dim exceeds the limit of " + std::to_string(max_dimension()));
            return;
        }
        program_.dim = dim;
        dim_valid_ = true;
    }

    void handle_state(const std::vector<Token>& tokens) {
        if (expect_ == Expect::Dim) {
            error(DiagCode::MisplacedDirective, tokens[0].column,
                  "state must follow the dim directive");
            return;
        }
        if (expect_ == Expect::Body) {
            error(DiagCode::MisplacedDirective, tokens[0].column,
                  "state may appear only once, directly after dim");
            return;
        }
        expect_ = Expect::Body;
        program_.state_span = {line_no_, tokens[0].column};

        if (tokens.size() >= 2 && tokens[1].kind == Token::Kind::Word &&
            tokens[1].text == "basis") {
            std::size_t index = 0;
            if (tokens.size() != 3 || tokens[2].kind != Token::Kind::Word ||
                !qsv::detail::parse_count(tokens[2].text, index) || index == 0) {
                error(DiagCode::ParseError, tokens[0].column,
                      "usage: state basis <i>");
                return;
            }
            if (dim_valid_ && index > program_.dim) {
                error(DiagCode::DimMismatch, tokens[2].column,
                      "basis index " + std::to_string(index) +
                          " outside 1.." + std::to_string(program_.dim));
                return;
            }
            program_.initial = BasisInit{index};
            return;
        }

        if (tokens.size() >= 2 && tokens[1].kind == Token::Kind::LBracket) {
            if (tokens.back().kind != Token::Kind::RBracket) {
                error(DiagCode::ParseError, tokens[1].column,
                      "state column must end with ']'");
                return;
            }
            ColumnInit column;
            for (std::size_t t = 2; t + 1 < tokens.size(); ++t) {
                if (tokens[t].kind != Token::Kind::ComplexLit) {
                    error(DiagCode::ParseError, tokens[t].column,
                          "expected complex literal '(a,b)' in state column");
                    return;
                }
                column.amplitudes.push_back(tokens[t].value);
            }
            if (column.amplitudes.empty()) {
                error(DiagCode::ParseError, tokens[1].column,
                      "state column must hold at least one amplitude");
                return;
            }
            if (dim_valid_ && column.amplitudes.size() != program_.dim) {
                error(DiagCode::DimMismatch, tokens[1].column,
                      "state column has " +
                          std::to_string(column.amplitudes.size()) +
                          " amplitudes but dim is " +
                          std::to_string(program_.dim));
                return;
            }
            program_.initial = std::move(column);
            return;
        }

        error(DiagCode::ParseError, tokens[0].column,
              "usage: state basis <i> | state [ (a,b) ... ]");
    }

    void handle_gate(const std::vector<Token>& tokens) {
        if (expect_ != Expect::Body) {
            error(DiagCode::MisplacedDirective, tokens[0].column,
                  "gate declarations must follow dim and state");
            return;
        }
        if (tokens.size() != 4 || tokens[1].kind != Token::Kind::Word ||
            tokens[2].kind != Token::Kind::Word || tokens[2].text != "file" ||
            tokens[3].kind != Token::Kind::Word) {
            error(DiagCode::ParseError, tokens[0].column,
                  "usage: gate <name> file <path>");
            return;
        }
        const std::string& name = tokens[1].text;
        if (name == "H" || name == "I" || name == "U") {
            error(DiagCode::ParseError, tokens[1].column,
                  "gate name '" + name + "' is reserved for a built-in");
            return;
        }
        for (const auto& gate : program_.gates) {
            if (gate.name == name) {
                error(DiagCode::ParseError, tokens[1].column,
                      "gate '" + name + "' is already declared");
                return;
            }
        }
        program_.gates.push_back(
            {name, tokens[3].text, {line_no_, tokens[0].column}});
    }

    void handle_apply(const std::vector<Token>& tokens) {
        if (expect_ != Expect::Body) {
            error(DiagCode::MisplacedDirective, tokens[0].column,
                  "apply must follow dim and state");
            return;
        }
        if (tokens.size() < 2 || tokens[1].kind != Token::Kind::Word) {
            error(DiagCode::ParseError, tokens[0].column,
                  "usage: apply <gate>");
            return;
        }
        const std::string& name = tokens[1].text;

        if (name == "U") {
            if (tokens.size() != 3 ||
                tokens[2].kind != Token::Kind::ComplexLit) {
                error(DiagCode::ParseError, tokens[1].column,
                      "oracle gate is written U(f_false,f_true)");
                return;
            }
            const Complex bits = tokens[2].value;
            const bool valid_bits =
                (bits.re == 0.0 || bits.re == 1.0) &&
                (bits.im == 0.0 || bits.im == 1.0);
            if (!valid_bits) {
                error(DiagCode::ParseError, tokens[2].column,
                      "oracle bits must be 0 or 1");
                return;
            }
            if (dim_valid_ && program_.dim != 4) {
                error(DiagCode::DimMismatch, tokens[1].column,
                      "built-in gate U is 4x4 but dim is " +
                          std::to_string(program_.dim));
                return;
            }
            program_.steps.push_back(ApplyStep{
                "U",
                OracleSpec(static_cast<int>(bits.re),
                           static_cast<int>(bits.im)),
                {line_no_, tokens[0].column}});
            return;
        }

        if (tokens.size() != 2) {
            error(DiagCode::ParseError, tokens[0].column,
                  "usage: apply <gate>");
            return;
        }
        if (name == "H") {
            if (dim_valid_ && program_.dim != 4) {
                error(DiagCode::DimMismatch, tokens[1].column,
                      "built-in gate H is 4x4 but dim is " +
                          std::to_string(program_.dim));
                return;
            }
        } else if (name != "I") {
            const bool declared =
                std::any_of(program_.gates.begin(), program_.gates.end(),
                            [&](const GateDecl& g) { return g.name == name; });
            if (!declared) {
                error(DiagCode::UnknownGate, tokens[1].column,
                      "gate '" + name + "' is neither declared nor built-in");
                return;
            }
        }
        program_.steps.push_back(
            ApplyStep{name, std::nullopt, {line_no_, tokens[0].column}});
    }

    void handle_measure(const std::vector<Token>& tokens) {
        if (expect_ != Expect::Body) {
            error(DiagCode::MisplacedDirective, tokens[0].column,
                  "measure must follow dim and state");
            return;
        }
        MeasureStep step{std::nullopt, {line_no_, tokens[0].column}};
        if (tokens.size() > 2) {
            error(DiagCode::ParseError, tokens[0].column,
                  "usage: measure [shots=<k>]");
            return;
        }
        if (tokens.size() == 2) {
            if (tokens[1].kind != Token::Kind::Word) {
                error(DiagCode::ParseError, tokens[1].column,
                      "usage: measure [shots=<k>]");
                return;
            }
            const std::string& arg = tokens[1].text;
            const std::size_t eq = arg.find('=');
            std::size_t shots = 0;
            if (eq == std::string::npos || arg.substr(0, eq) != "shots" ||
                !qsv::detail::parse_count(arg.substr(eq + 1), shots)) {
                error(DiagCode::ParseError, tokens[1].column,
                      "usage: measure [shots=<k>]");
                return;
            }
            if (shots == 0) {
                error(DiagCode::ParseError, tokens[1].column,
                      "shots must be at least 1");
                return;
            }
            step.shots = shots;
        }
        program_.steps.push_back(step);
        seen_measure_ = true;
    }

    // Keeps the prologue state machine moving when a dim or state line is
    // unlexable, so that one bad line does not cascade into misleading
    // "missing directive" diagnostics.
    void recover_past(std::string_view line) {
        std::size_t start = 0;
        while (start < line.size() && qsv::detail::is_space(line[start]))
            ++start;
        std::size_t end = start;
        while (end < line.size() && qsv::detail::is_word_char(line[end])) ++end;
        const std::string_view keyword = line.substr(start, end - start);
        if (keyword == "dim" && expect_ == Expect::Dim) {
            expect_ = Expect::State;
        } else if (keyword == "state" && expect_ == Expect::State) {
            expect_ = Expect::Body;
        }
    }

    void finish() {
        if (expect_ == Expect::Dim) {
            error(DiagCode::ParseError, 1, "missing dim directive");
        } else if (expect_ == Expect::State) {
            error(DiagCode::ParseError, 1, "missing state directive");
        }
    }

    std::string_view text_;
    Program program_;
    std::vector<Diagnostic> diagnostics_;
    std::size_t line_no_ = 0;
    Expect expect_ = Expect::Dim;
    bool dim_valid_ = false;
    bool seen_measure_ = false;
};

} // namespace detail

/// Parses a circuit description. On success the result holds a Program;
/// otherwise it holds one diagnostic per problem found.
inline ParseResult parse(std::string_view text) {
    return detail::ParserState(text).run();
}

} // namespace qsv::qcl
