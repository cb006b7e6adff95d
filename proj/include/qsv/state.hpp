#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsv/matrix.hpp"
#include "qsv/random.hpp"

namespace qsv {

/// The state of a closed system: a unit n-by-1 column of complex numbers.
///
/// The unit condition is checked at construction and the column is stored
/// exactly as given; nothing is ever renormalized. States are immutable
/// and safe to share between threads.
class State {
public:
    /// Wraps a column after validating it. Throws NotAColumn when the
    /// matrix has more than one column, NotUnit (with the observed
    /// deviation) when the unit check fails at tol.
    explicit State(Matrix column, double tol = kDefaultTol)
        : column_(std::move(column)) {
        if (column_.cols() != 1) {
            throw NotAColumn("state must be an n-by-1 column, got " +
                             column_.shape_string());
        }
        const double deviation = unit_deviation(column_);
        if (!(deviation < tol)) {
            throw NotUnit("column is not a unit matrix: deviation " +
                              std::to_string(deviation) + " exceeds tolerance " +
                              std::to_string(tol),
                          deviation);
        }
    }

    /// The i-th basis state of dimension n: (1,0) at row i, (0,0) elsewhere.
    static State basis(std::size_t n, std::size_t i) {
        if (n < 1) throw IndexOutOfRange("dimension must be at least 1");
        if (i < 1 || i > n) {
            throw IndexOutOfRange("basis index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n));
        }
        Matrix column(n, 1);
        column.at(i, 1) = Complex(1.0, 0.0);
        return State(std::move(column));
    }

    std::size_t dim() const noexcept { return column_.rows(); }
    const Matrix& column() const noexcept { return column_; }

    /// 1-based amplitude access.
    const Complex& amplitude(std::size_t i) const { return column_.at(i, 1); }

    friend bool operator==(const State&, const State&) = default;

private:
    Matrix column_;
};

/// Outcome probabilities of a measurement, one per degree of freedom.
/// Components are clamped to [0, 1]; the raw sum must lie within 1e-8 of 1.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
        sum_ = 0.0;
        for (double& p : probs_) {
            if (p < 0.0) p = 0.0;
            if (p > 1.0) p = 1.0;
            sum_ += p;
        }
        if (std::abs(sum_ - 1.0) > 1e-8) {
            throw InvalidDistribution("probabilities sum to " +
                                      std::to_string(sum_) + ", not 1");
        }
    }

    const std::vector<double>& values() const noexcept { return probs_; }
    double sum() const noexcept { return sum_; }
    std::size_t size() const noexcept { return probs_.size(); }

private:
    std::vector<double> probs_;
    double sum_;
};

/// The result of one measurement: the observed 1-based outcome and the
/// basis state the system collapsed to.
struct MeasurementRecord {
    std::size_t outcome;
    State collapsed;
};

/// Outcome index (1-based) to observation count.
using Histogram = std::map<std::size_t, std::uint64_t>;

/// One evolution step W = UV. U must be n-by-n and unit at tol; the result
/// is validated as a state at the same tolerance.
inline State evolve(const State& s, const Matrix& u, double tol = kDefaultTol) {
    if (u.rows() != s.dim() || u.cols() != s.dim()) {
        throw ShapeMismatch("evolution matrix is " + u.shape_string() +
                            " but the state has dimension " +
                            std::to_string(s.dim()));
    }
    if (!is_unit(u, tol)) {
        throw NotUnit("evolution matrix is not unit: deviation " +
                          std::to_string(unit_deviation(u)),
                      unit_deviation(u));
    }
    return State(u * s.column(), tol);
}

/// p_i = |V_i1|^2 for each row of the state column.
inline ProbVector probabilities(const State& s) {
    std::vector<double> probs;
    probs.reserve(s.dim());
    for (std::size_t i = 1; i <= s.dim(); ++i) {
        const double magnitude = norm(s.amplitude(i));
        probs.push_back(magnitude * magnitude);
    }
    return ProbVector(std::move(probs));
}

/// Measures the state: draws u in [0, 1) from rng and selects the smallest
/// outcome i whose cumulative renormalized probability exceeds u. The
/// system collapses to the basis state of the observed outcome. Only
/// outcomes with nonzero probability can be returned.
template <uniform_source Source>
MeasurementRecord measure(const State& s, Source& rng) {
    const ProbVector pv = probabilities(s);
    const double total = pv.sum();
    const double draw = rng.next_uniform();

    double cumulative = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 1; i <= pv.size(); ++i) {
        const double p = pv.values()[i - 1] / total;
        if (p > 0.0) last_nonzero = i;
        cumulative += p;
        if (cumulative > draw) {
            return MeasurementRecord{i, State::basis(s.dim(), i)};
        }
    }
    // The renormalized sum can fall a few ulps short of 1; attribute the
    // remaining tail to the last outcome that has any probability mass.
    return MeasurementRecord{last_nonzero, State::basis(s.dim(), last_nonzero)};
}

/// Measures `shots` fresh copies of the state with a source seeded by
/// `seed` and returns the outcome counts. Counts sum to shots and the
/// result is a pure function of (state, shots, seed).
inline Histogram sample(const State& s, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw InvalidArgument("shots must be at least 1");
    RandomSource rng(seed);
    Histogram counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        counts[measure(s, rng).outcome] += 1;
    }
    return counts;
}

} // namespace qsv
