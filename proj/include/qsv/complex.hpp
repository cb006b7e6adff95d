#pragma once

#include <cmath>

#include "qsv/error.hpp"

namespace qsv {

/// A complex number as an ordered pair of real scalars (re, im).
///
/// Construction rejects NaN and infinities, so every value that exists is
/// finite. Arithmetic on finite inputs of bounded magnitude stays finite;
/// an overflowing operation raises NonFiniteValue instead of propagating Inf.
struct Complex {
    double re = 0.0;
    double im = 0.0;

    constexpr Complex() = default;

    Complex(double real, double imag) : re(real), im(imag) {
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw NonFiniteValue("complex component is not finite");
        }
    }

    friend constexpr bool operator==(const Complex&, const Complex&) = default;
};

/// (a1,b1) + (a2,b2) = (a1+a2, b1+b2)
inline Complex operator+(const Complex& z1, const Complex& z2) {
    return Complex(z1.re + z2.re, z1.im + z2.im);
}

/// (a1,b1)(a2,b2) = (a1 a2 - b1 b2, a1 b2 + a2 b1)
inline Complex operator*(const Complex& z1, const Complex& z2) {
    return Complex(z1.re * z2.re - z1.im * z2.im,
                   z1.re * z2.im + z2.re * z1.im);
}

/// Conjugation: (a,b)* = (a,-b)
inline Complex conj(const Complex& z) {
    return Complex(z.re, -z.im);
}

/// Norm: |(a,b)| = sqrt(a^2 + b^2)
inline double norm(const Complex& z) {
    return std::sqrt(z.re * z.re + z.im * z.im);
}

} // namespace qsv
