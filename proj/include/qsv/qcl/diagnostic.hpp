#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qsv::qcl {

enum class DiagCode {
    ParseError,
    DimMismatch,
    UnknownGate,
    MisplacedDirective,
    NotUnit,
    ShapeMismatch,
    FileError,
};

inline const char* to_string(DiagCode code) {
    switch (code) {
        case DiagCode::ParseError: return "ParseError";
        case DiagCode::DimMismatch: return "DimMismatch";
        case DiagCode::UnknownGate: return "UnknownGate";
        case DiagCode::MisplacedDirective: return "MisplacedDirective";
        case DiagCode::NotUnit: return "NotUnit";
        case DiagCode::ShapeMismatch: return "ShapeMismatch";
        case DiagCode::FileError: return "FileError";
    }
    return "Unknown";
}

/// One problem found while parsing or checking a program, anchored to a
/// 1-based line and column of the source text.
struct Diagnostic {
    DiagCode code;
    std::size_t line;
    std::size_t column;
    std::string message;
};

inline std::string format_diagnostic(const Diagnostic& d) {
    return "error[" + std::string(to_string(d.code)) + "] line " +
           std::to_string(d.line) + ", col " + std::to_string(d.column) +
           ": " + d.message;
}

inline std::string format_diagnostics(const std::vector<Diagnostic>& list) {
    std::string out;
    for (const auto& d : list) {
        out += format_diagnostic(d);
        out += "\n";
    }
    return out;
}

} // namespace qsv::qcl
