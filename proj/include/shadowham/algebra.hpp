#pragma once

#include <complex>
#include <utility>

#include "shadowham/error.hpp"

namespace shadowham {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Dense 2x2 complex matrix, row-major entries.
struct Mat2C {
    Complex e11{}, e12{}, e21{}, e22{};

    static constexpr Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2C zero() { return {}; }

    Complex trace() const { return e11 + e22; }
    Complex det() const { return e11 * e22 - e12 * e21; }

    /// Largest entry modulus.
    double max_abs() const;

    Mat2C inverse() const;

    friend Mat2C operator+(const Mat2C& a, const Mat2C& b) {
        return {a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
    }
    friend Mat2C operator-(const Mat2C& a, const Mat2C& b) {
        return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
    }
    friend Mat2C operator*(const Mat2C& a, const Mat2C& b) {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }
    friend Mat2C operator*(Complex s, const Mat2C& a) {
        return {s * a.e11, s * a.e12, s * a.e21, s * a.e22};
    }
    friend Mat2C operator*(const Mat2C& a, Complex s) { return s * a; }
};

/// Column vector (q, p) in phase space.
struct Vec2C {
    Complex q{}, p{};
};

inline Vec2C operator*(const Mat2C& m, const Vec2C& v) {
    return {m.e11 * v.q + m.e12 * v.p, m.e21 * v.q + m.e22 * v.p};
}

/// Entrywise max |a - b|.
double max_abs_diff(const Mat2C& a, const Mat2C& b);

/// Roots of l^2 - tr(m) l + det(m) = 0, ordered by (re, im) descending.
/// A double root is returned twice.
std::pair<Complex, Complex> eigenvalues2(const Mat2C& m);

struct Polar {
    double modulus;
    double theta;  // in (-pi, pi]
};

/// Polar form with theta in (-pi, pi]; negative reals map to +pi.
/// Throws ErrorCode::ZeroEigenvalue for y == 0.
Polar principal_polar(Complex y);

/// log|y| + i*theta + 2*pi*i*m, theta from principal_polar.
Complex log_branch(Complex y, long m);

/// Partial Taylor sum  sum_{k=0..terms} z^k / k!.
Mat2C taylor_exp(const Mat2C& z, int terms = 40);

/// Taylor partial sum on z / 2^s followed by s squarings, with s picked so the
/// scaled argument has entrywise norm <= 1/2. Uses products and sums only.
Mat2C taylor_exp_squared(const Mat2C& z, int terms = 40);

/// Closed-form 2x2 exponential. Distinct eigenvalues go through the spectral
/// form written as e^mu (cosh(d) I + sinh(d)/d (z - mu I)) with mu = tr/2 and
/// d = (l1 - l2)/2; a double eigenvalue x uses e^x (I + (z - x I)).
Mat2C closed_exp(const Mat2C& z);

/// True when |l1 - l2| <= 1e-9 * max(1, |l1| + |l2|).
bool is_double_eigenvalue(Complex l1, Complex l2);

}  // namespace shadowham
