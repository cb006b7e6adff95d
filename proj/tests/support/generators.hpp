#pragma once

// Seeded random builders shared by the unit suites and the acceptance
// runner. Everything here is independent of the library's RandomSource so
// test inputs cannot be skewed by the code under test.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qsv/matrix.hpp"

namespace qsv::testing {

using Rng = std::mt19937_64;

inline double random_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_complex(Rng& rng, double max_mag = 10.0) {
    return Complex(random_real(rng, -max_mag, max_mag),
                   random_real(rng, -max_mag, max_mag));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                            double max_mag = 10.0) {
    Matrix m(rows, cols);
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j)
            m.at(i, j) = random_complex(rng, max_mag);
    return m;
}

// Random column normalized to unit length.
inline Matrix random_unit_column(Rng& rng, std::size_t n) {
    while (true) {
        Matrix column = random_matrix(rng, n, 1, 1.0);
        double sum_sq = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            const double mag = norm(column.at(i, 1));
            sum_sq += mag * mag;
        }
        const double length = std::sqrt(sum_sq);
        if (length < 1e-3) continue; // re-draw near-zero columns
        for (std::size_t i = 1; i <= n; ++i) {
            const Complex& z = column.at(i, 1);
            column.at(i, 1) = Complex(z.re / length, z.im / length);
        }
        return column;
    }
}

// Plane rotation by theta embedded at rows/cols (p, q); unit by construction.
inline Matrix givens_rotation(std::size_t n, std::size_t p, std::size_t q,
                              double theta) {
    Matrix m = identity(n);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    m.at(p, p) = Complex(c, 0.0);
    m.at(q, q) = Complex(c, 0.0);
    m.at(p, q) = Complex(-s, 0.0);
    m.at(q, p) = Complex(s, 0.0);
    return m;
}

// Diagonal of phases (cos t_k, sin t_k); unit by construction.
inline Matrix phase_diagonal(Rng& rng, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double t = random_real(rng, 0.0, 2.0 * std::numbers::pi);
        m.at(i, i) = Complex(std::cos(t), std::sin(t));
    }
    return m;
}

// Random unit matrix built as a product of verified unit factors
// (rotations and phase diagonals). Each factor is checked at 1e-12
// before being multiplied in.
inline Matrix random_unit_matrix(Rng& rng, std::size_t n,
                                 std::size_t factors = 12) {
    Matrix product = identity(n);
    for (std::size_t f = 0; f < factors; ++f) {
        Matrix factor = phase_diagonal(rng, n);
        if (n >= 2 && f % 2 == 0) {
            std::uniform_int_distribution<std::size_t> pick(1, n);
            std::size_t p = pick(rng);
            std::size_t q = pick(rng);
            while (q == p) q = pick(rng);
            factor = givens_rotation(
                n, p, q, random_real(rng, 0.0, 2.0 * std::numbers::pi));
        }
        if (!is_unit(factor, 1e-12)) {
            throw std::logic_error("generator produced a non-unit factor");
        }
        product = factor * product;
    }
    return product;
}

// Independent triple-loop product over plain doubles, used as an oracle
// against the library's multiplication.
inline Matrix brute_force_multiply(const Matrix& a, const Matrix& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t r = b.cols();
    std::vector<double> re(m * r, 0.0);
    std::vector<double> im(m * r, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t q = 0; q < r; ++q) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex& x = a.at(i + 1, k + 1);
                const Complex& y = b.at(k + 1, q + 1);
                re[i * r + q] += x.re * y.re - x.im * y.im;
                im[i * r + q] += x.re * y.im + y.re * x.im;
            }
        }
    }
    Matrix result(m, r);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = 0; q < r; ++q)
            result.at(i + 1, q + 1) = Complex(re[i * r + q], im[i * r + q]);
    return result;
}

} // namespace qsv::testing
