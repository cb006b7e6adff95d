#pragma once

#include <atomic>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsv/complex.hpp"
#include "qsv/error.hpp"

namespace qsv {

/// Default per-component tolerance for unit checks.
inline constexpr double kDefaultTol = 1e-9;

namespace detail {
inline std::atomic<std::size_t>& max_dimension_slot() {
    static std::atomic<std::size_t> limit{4096};
    return limit;
}
} // namespace detail

/// Soft upper bound on rows/cols of any matrix (default 4096).
inline std::size_t max_dimension() {
    return detail::max_dimension_slot().load();
}

inline void set_max_dimension(std::size_t limit) {
    if (limit == 0) throw InvalidArgument("max dimension must be positive");
    detail::max_dimension_slot().store(limit);
}

/// An m-by-n table of complex numbers, stored row-major.
///
/// Component access is 1-based: at(i, j) addresses row i in 1..m and
/// column j in 1..n, matching the usual A_ij subscript convention. Values
/// are immutable once built except through the non-const at() accessor,
/// which is intended for filling in freshly constructed matrices.
class Matrix {
public:
    /// m-by-n matrix of (0,0).
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), components_(check_shape(rows, cols)) {}

    /// m-by-n matrix from row-major components (length must be m*n).
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> components)
        : rows_(rows), cols_(cols), components_(std::move(components)) {
        check_shape(rows, cols);
        if (components_.size() != rows_ * cols_) {
            throw ShapeMismatch("component count " +
                                std::to_string(components_.size()) +
                                " does not match shape " + shape_string());
        }
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
        if (rows.size() == 0) throw ShapeMismatch("matrix needs at least one row");
        const std::size_t n = rows.begin()->size();
        std::vector<Complex> components;
        components.reserve(rows.size() * n);
        for (const auto& row : rows) {
            if (row.size() != n) {
                throw ShapeMismatch("rows have inconsistent lengths");
            }
            components.insert(components.end(), row.begin(), row.end());
        }
        return Matrix(rows.size(), n, std::move(components));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    /// 1-based component access; throws IndexOutOfRange outside 1..m, 1..n.
    const Complex& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return components_[(i - 1) * cols_ + (j - 1)];
    }

    Complex& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return components_[(i - 1) * cols_ + (j - 1)];
    }

    /// Row-major view of all components.
    std::span<const Complex> components() const noexcept { return components_; }

    std::string shape_string() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    static std::size_t check_shape(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0) {
            throw ShapeMismatch("matrix dimensions must be positive");
        }
        if (rows > max_dimension() || cols > max_dimension()) {
            throw DimensionLimit("matrix dimension exceeds limit of " +
                                 std::to_string(max_dimension()));
        }
        return rows * cols;
    }

    void check_index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw IndexOutOfRange("component (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside " +
                                  shape_string() + " matrix");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> components_;
};

/// A^t has ij-component A_ji.
inline Matrix transpose(const Matrix& a) {
    Matrix result(a.cols(), a.rows());
    for (std::size_t i = 1; i <= a.cols(); ++i)
        for (std::size_t j = 1; j <= a.rows(); ++j)
            result.at(i, j) = a.at(j, i);
    return result;
}

/// A† has ij-component conj(A_ji).
inline Matrix dagger(const Matrix& a) {
    Matrix result(a.cols(), a.rows());
    for (std::size_t i = 1; i <= a.cols(); ++i)
        for (std::size_t j = 1; j <= a.rows(); ++j)
            result.at(i, j) = conj(a.at(j, i));
    return result;
}

/// Componentwise sum; shapes must match.
inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch("cannot add " + a.shape_string() + " and " +
                            b.shape_string() + " matrices");
    }
    Matrix result(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            result.at(i, j) = a.at(i, j) + b.at(i, j);
    return result;
}

/// Matrix product. The iq-component is A_i1 B_1q + A_i2 B_2q + .. + A_in B_nq,
/// accumulated left to right in index order so results are reproducible
/// bit for bit.
inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeMismatch("cannot multiply " + a.shape_string() + " by " +
                            b.shape_string() + " matrix");
    }
    Matrix result(a.rows(), b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t q = 1; q <= b.cols(); ++q) {
            Complex sum;
            for (std::size_t k = 1; k <= a.cols(); ++k) {
                sum = sum + a.at(i, k) * b.at(k, q);
            }
            result.at(i, q) = sum;
        }
    }
    return result;
}

/// The n-by-n identity: (1,0) on the diagonal, (0,0) elsewhere.
inline Matrix identity(std::size_t n) {
    Matrix result(n, n);
    for (std::size_t i = 1; i <= n; ++i) result.at(i, i) = Complex(1.0, 0.0);
    return result;
}

/// Largest per-component deviation of M†M from the identity, taking the
/// worse of the real and imaginary differences.
inline double unit_deviation(const Matrix& m) {
    const Matrix product = dagger(m) * m;
    double worst = 0.0;
    for (std::size_t i = 1; i <= product.rows(); ++i) {
        for (std::size_t j = 1; j <= product.cols(); ++j) {
            const double expected_re = (i == j) ? 1.0 : 0.0;
            const Complex& c = product.at(i, j);
            const double dev_re = std::abs(c.re - expected_re);
            const double dev_im = std::abs(c.im);
            if (dev_re > worst) worst = dev_re;
            if (dev_im > worst) worst = dev_im;
        }
    }
    return worst;
}

/// Whether M†M = I_n with every component within tol in both re and im.
/// Defined for rectangular M as well; only the column count matters.
inline bool is_unit(const Matrix& m, double tol = kDefaultTol) {
    if (tol <= 0.0) throw InvalidArgument("tolerance must be positive");
    return unit_deviation(m) < tol;
}

/// Componentwise comparison within an absolute tolerance on re and im.
inline bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            if (std::abs(a.at(i, j).re - b.at(i, j).re) > tol) return false;
            if (std::abs(a.at(i, j).im - b.at(i, j).im) > tol) return false;
        }
    }
    return true;
}

} // namespace qsv
