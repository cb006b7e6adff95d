#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsv/complex.hpp"
#include "qsv/detail/format.hpp"
#include "qsv/deutsch.hpp"

namespace qsv::qcl {

/// 1-based position of a directive in the source text.
struct SourceSpan {
    std::size_t line = 0;
    std::size_t column = 0;
};

/// `state basis <i>`
struct BasisInit {
    std::size_t index = 1;
};

/// `state [ (a,b) ... ]`
struct ColumnInit {
    std::vector<Complex> amplitudes;
};

using StateInit = std::variant<BasisInit, ColumnInit>;

/// `gate <name> file <path>` — a gate whose matrix lives in a file,
/// resolved relative to the program's directory.
struct GateDecl {
    std::string name;
    std::string file;
    SourceSpan span;
};

/// `apply <name>` where name is a declared gate, `H`, `I`, or the
/// parameterized oracle literal `U(f_false,f_true)`.
struct ApplyStep {
    std::string gate;
    std::optional<OracleSpec> oracle;
    SourceSpan span;
};

/// `measure` or `measure shots=<k>`
struct MeasureStep {
    std::optional<std::uint64_t> shots;
    SourceSpan span;
};

using Step = std::variant<ApplyStep, MeasureStep>;

/// A parsed circuit description: dimension, initial state, declared gates
/// and the ordered steps. Spans point back into the source for reporting.
struct Program {
    std::size_t dim = 0;
    StateInit initial;
    std::vector<GateDecl> gates;
    std::vector<Step> steps;
    SourceSpan dim_span;
    SourceSpan state_span;

    bool has_measure() const {
        for (const auto& step : steps) {
            if (std::holds_alternative<MeasureStep>(step)) return true;
        }
        return false;
    }

    bool applies_oracle() const {
        for (const auto& step : steps) {
            if (const auto* apply = std::get_if<ApplyStep>(&step)) {
                if (apply->oracle) return true;
            }
        }
        return false;
    }
};

/// Display spelling of an apply target, e.g. "H" or "U(0,1)".
inline std::string gate_display_name(const ApplyStep& step) {
    if (step.oracle) {
        return "U(" + std::to_string(step.oracle->f_false) + "," +
               std::to_string(step.oracle->f_true) + ")";
    }
    return step.gate;
}

/// Structural comparison that ignores source spans, so a pretty-printed
/// and re-parsed program compares equal to the original.
inline bool structurally_equal(const Program& a, const Program& b) {
    if (a.dim != b.dim) return false;
    if (a.initial.index() != b.initial.index()) return false;
    if (const auto* basis = std::get_if<BasisInit>(&a.initial)) {
        if (basis->index != std::get<BasisInit>(b.initial).index) return false;
    } else {
        const auto& lhs = std::get<ColumnInit>(a.initial).amplitudes;
        const auto& rhs = std::get<ColumnInit>(b.initial).amplitudes;
        if (lhs != rhs) return false;
    }
    if (a.gates.size() != b.gates.size()) return false;
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
        if (a.gates[i].name != b.gates[i].name) return false;
        if (a.gates[i].file != b.gates[i].file) return false;
    }
    if (a.steps.size() != b.steps.size()) return false;
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (a.steps[i].index() != b.steps[i].index()) return false;
        if (const auto* apply = std::get_if<ApplyStep>(&a.steps[i])) {
            const auto& other = std::get<ApplyStep>(b.steps[i]);
            if (apply->gate != other.gate) return false;
            if (apply->oracle != other.oracle) return false;
        } else {
            const auto& lhs = std::get<MeasureStep>(a.steps[i]);
            const auto& rhs = std::get<MeasureStep>(b.steps[i]);
            if (lhs.shots != rhs.shots) return false;
        }
    }
    return true;
}

/// Canonical source form; parsing it back yields a structurally equal
/// program. Numbers are printed with exact round-trip spellings.
inline std::string pretty_print(const Program& p) {
    std::string out = "dim " + std::to_string(p.dim) + "\n";
    if (const auto* basis = std::get_if<BasisInit>(&p.initial)) {
        out += "state basis " + std::to_string(basis->index) + "\n";
    } else {
        out += "state [";
        for (const Complex& z : std::get<ColumnInit>(p.initial).amplitudes) {
            out += " " + qsv::detail::format_complex_exact(z);
        }
        out += " ]\n";
    }
    for (const auto& gate : p.gates) {
        out += "gate " + gate.name + " file " + gate.file + "\n";
    }
    for (const auto& step : p.steps) {
        if (const auto* apply = std::get_if<ApplyStep>(&step)) {
            out += "apply " + gate_display_name(*apply) + "\n";
        } else {
            const auto& measure = std::get<MeasureStep>(step);
            out += "measure";
            if (measure.shots) out += " shots=" + std::to_string(*measure.shots);
            out += "\n";
        }
    }
    return out;
}

} // namespace qsv::qcl
