#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qsv/deutsch.hpp"
#include "qsv/matrix_io.hpp"
#include "qsv/qcl/program.hpp"
#include "qsv/random.hpp"
#include "qsv/state.hpp"

namespace qsv::qcl {

struct ExecOptions {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots_override;
    bool trace = false;
    double tol = kDefaultTol;
    std::filesystem::path base_dir = ".";
};

struct TraceEntry {
    std::string label;
    State state;
};

/// The result of running a program: the final outcome distribution plus
/// either a histogram (measure with shots) or a single measurement
/// (measure without shots), optional per-step state snapshots, and the
/// wall-clock duration. Identical (program, seed, shots) yield identical
/// semantic content; only duration_ms varies between runs.
struct Report {
    std::string program_name;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots;
    std::vector<double> probabilities;
    std::optional<Histogram> histogram;
    std::optional<MeasurementRecord> measurement;
    std::vector<TraceEntry> trace;
    bool outcome_names = false; // label outcomes with boolean pairs
    double duration_ms = 0.0;
};

/// Executes a program that passed check(). Applies the steps in order,
/// then measures per the measure directive (a --shots override replaces
/// its count). Engine errors (NotUnit, ShapeMismatch) propagate as
/// exceptions; check() pre-empts them for validated programs.
inline Report exec(const Program& p, const ExecOptions& options = {}) {
    const auto start = std::chrono::steady_clock::now();

    Report report;
    report.seed = options.seed;
    report.outcome_names = (p.dim == 4) && p.applies_oracle();

    State state = [&] {
        if (const auto* basis = std::get_if<BasisInit>(&p.initial)) {
            return State::basis(p.dim, basis->index);
        }
        return State(Matrix(p.dim, 1, std::get<ColumnInit>(p.initial).amplitudes),
                     options.tol);
    }();
    if (options.trace) report.trace.push_back({"initial", state});

    std::map<std::string, Matrix> file_gates;
    for (const auto& gate : p.gates) {
        file_gates.emplace(gate.name, read_matrix_file(options.base_dir / gate.file));
    }

    RandomSource rng(options.seed);
    for (const auto& step : p.steps) {
        if (const auto* apply = std::get_if<ApplyStep>(&step)) {
            const Matrix matrix = [&]() -> Matrix {
                if (apply->oracle) return oracle_matrix(*apply->oracle);
                if (apply->gate == "H") return hadamard4();
                if (apply->gate == "I") return identity(p.dim);
                return file_gates.at(apply->gate);
            }();
            state = evolve(state, matrix, options.tol);
            if (options.trace) {
                report.trace.push_back(
                    {"after " + gate_display_name(*apply), state});
            }
        } else {
            const auto& measure_step = std::get<MeasureStep>(step);
            std::optional<std::uint64_t> shots = measure_step.shots;
            if (options.shots_override) shots = options.shots_override;
            if (shots) {
                report.shots = shots;
                report.histogram = sample(state, *shots, options.seed);
            } else {
                report.measurement = measure(state, rng);
            }
        }
    }

    report.probabilities = probabilities(state).values();

    const auto end = std::chrono::steady_clock::now();
    report.duration_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

} // namespace qsv::qcl
