#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "qsv/matrix_io.hpp"
#include "qsv/qcl/diagnostic.hpp"
#include "qsv/qcl/program.hpp"
#include "qsv/state.hpp"

namespace qsv::qcl {

/// Static validation ahead of execution: the initial state must satisfy
/// the unit condition at tol, and every file-backed gate must load, be
/// dim-by-dim, and be unit at tol. Gate paths resolve relative to
/// base_dir. Returns one diagnostic per violation; an empty list means
/// exec cannot fail a postulate check.
inline std::vector<Diagnostic> check(
    const Program& p, double tol = kDefaultTol,
    const std::filesystem::path& base_dir = ".") {
    std::vector<Diagnostic> diagnostics;

    if (const auto* column = std::get_if<ColumnInit>(&p.initial)) {
        try {
            State initial(Matrix(p.dim, 1, column->amplitudes), tol);
        } catch (const NotUnit& e) {
            diagnostics.push_back(
                {DiagCode::NotUnit, p.state_span.line, p.state_span.column,
                 "initial state is not unit (deviation " +
                     qsv::detail::format_significant(e.deviation(), 6) + ", tol " +
                     qsv::detail::format_significant(tol, 6) + ")"});
        }
    }

    for (const auto& gate : p.gates) {
        Matrix matrix(1, 1);
        try {
            matrix = read_matrix_file(base_dir / gate.file);
        } catch (const MatrixParseError& e) {
            diagnostics.push_back(
                {DiagCode::FileError, gate.span.line, gate.span.column,
                 "gate '" + gate.name + "': " + gate.file + ": " + e.what()});
            continue;
        } catch (const Error& e) {
            diagnostics.push_back({DiagCode::FileError, gate.span.line,
                                   gate.span.column,
                                   "gate '" + gate.name + "': " + e.what()});
            continue;
        }
        if (matrix.rows() != p.dim || matrix.cols() != p.dim) {
            diagnostics.push_back(
                {DiagCode::ShapeMismatch, gate.span.line, gate.span.column,
                 "gate '" + gate.name + "' is " + matrix.shape_string() +
                     " but dim is " + std::to_string(p.dim)});
            continue;
        }
        if (!is_unit(matrix, tol)) {
            diagnostics.push_back(
                {DiagCode::NotUnit, gate.span.line, gate.span.column,
                 "gate '" + gate.name + "' is not unit (deviation " +
                     qsv::detail::format_significant(unit_deviation(matrix), 6) +
                     ", tol " + qsv::detail::format_significant(tol, 6) + ")"});
        }
    }

    return diagnostics;
}

} // namespace qsv::qcl
