#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "qsv/matrix.hpp"
#include "qsv/random.hpp"
#include "qsv/state.hpp"

namespace qsv {

/// Specification of the black-box boolean operator F as two indicator
/// bits: f_false = 1 iff F(False) is True, f_true = 1 iff F(True) is True.
struct OracleSpec {
    int f_false;
    int f_true;

    OracleSpec(int ff, int ft) : f_false(ff), f_true(ft) {
        if ((ff != 0 && ff != 1) || (ft != 0 && ft != 1)) {
            throw InvalidArgument("oracle bits must be 0 or 1");
        }
    }

    friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

/// Reference answer computed classically: Xor(F(False), F(True)).
inline bool classical_oracle_xor(const OracleSpec& spec) {
    return spec.f_false != spec.f_true;
}

/// Name of a 4-dimensional basis outcome as a pair of boolean values:
/// 1 = False,False  2 = False,True  3 = True,False  4 = True,True.
inline const std::string& basis_name4(std::size_t outcome) {
    static const std::array<std::string, 4> names = {
        "False,False", "False,True", "True,False", "True,True"};
    if (outcome < 1 || outcome > 4) {
        throw IndexOutOfRange("basis name index " + std::to_string(outcome) +
                              " outside 1..4");
    }
    return names[outcome - 1];
}

/// The 4-by-4 evolution implementing the black box: a block for each input
/// value that either keeps or flips the answer bit. Unit for every spec.
inline Matrix oracle_matrix(const OracleSpec& spec) {
    const double ff = static_cast<double>(spec.f_false);
    const double ft = static_cast<double>(spec.f_true);
    return Matrix::from_rows({
        {{1.0 - ff, 0.0}, {ff, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
        {{ff, 0.0}, {1.0 - ff, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
        {{0.0, 0.0}, {0.0, 0.0}, {1.0 - ft, 0.0}, {ft, 0.0}},
        {{0.0, 0.0}, {0.0, 0.0}, {ft, 0.0}, {1.0 - ft, 0.0}},
    });
}

/// The fixed 4-by-4 unit matrix of +-1/2 entries applied before and after
/// the oracle.
inline Matrix hadamard4() {
    const Complex p(0.5, 0.0);
    const Complex m(-0.5, 0.0);
    return Matrix::from_rows({
        {p, p, p, p},
        {p, m, p, m},
        {p, p, m, m},
        {p, m, m, p},
    });
}

/// Maps a measured outcome to the Xor value it certifies: 2 means False,
/// 4 means True. Anything else has probability zero and signals a defect.
inline bool classify(std::size_t outcome) {
    if (outcome == 2) return false;
    if (outcome == 4) return true;
    throw UnexpectedOutcome("outcome " + std::to_string(outcome) +
                            " should occur with probability 0");
}

/// Everything produced by one run: the oracle bits, the four states the
/// system passes through, the measured outcome and its probability, and
/// the Xor value read off the outcome.
struct DeutschReport {
    OracleSpec oracle;
    State v;
    State hv;
    State uhv;
    State huhv;
    std::size_t outcome;
    bool xor_value;
    double outcome_probability;

    /// Labeled intermediate states in execution order.
    std::array<std::pair<const char*, const State*>, 4> stages() const {
        return {{{"V", &v}, {"HV", &hv}, {"UHV", &uhv}, {"HUHV", &huhv}}};
    }
};

/// Runs the five-step circuit with the oracle built by `provider`, which is
/// invoked exactly once per run: start in basis state 2 of dimension 4,
/// evolve by H, by the oracle, by H again, then measure.
template <uniform_source Source, typename Provider>
DeutschReport run_deutsch(const OracleSpec& spec, Source& rng,
                          Provider&& provider) {
    const Matrix h = hadamard4();

    State v = State::basis(4, 2);
    State hv = evolve(v, h);
    const Matrix u = provider(spec);
    State uhv = evolve(hv, u);
    State huhv = evolve(uhv, h);

    const MeasurementRecord record = measure(huhv, rng);
    const double probability = probabilities(huhv).values()[record.outcome - 1];
    const bool xor_value = classify(record.outcome);

    return DeutschReport{spec,
                         std::move(v),
                         std::move(hv),
                         std::move(uhv),
                         std::move(huhv),
                         record.outcome,
                         xor_value,
                         probability};
}

template <uniform_source Source>
DeutschReport run_deutsch(const OracleSpec& spec, Source& rng) {
    return run_deutsch(spec, rng,
                       [](const OracleSpec& s) { return oracle_matrix(s); });
}

} // namespace qsv
