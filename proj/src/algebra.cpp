#include "shadowham/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace shadowham {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
        case ErrorCode::InvalidTau: return "InvalidTau";
        case ErrorCode::NotSymplectic: return "NotSymplectic";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NotDefective: return "NotDefective";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::DegenerateBranch: return "DegenerateBranch";
        case ErrorCode::NoHamiltonian: return "NoHamiltonian";
        case ErrorCode::NotTraceless: return "NotTraceless";
        case ErrorCode::CriticalTau: return "CriticalTau";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::UnknownIntegrator: return "UnknownIntegrator";
    }
    return "Unknown";
}

double Mat2C::max_abs() const {
    return std::max({std::abs(e11), std::abs(e12), std::abs(e21), std::abs(e22)});
}

Mat2C Mat2C::inverse() const {
    const Complex d = det();
    if (d == Complex{0.0, 0.0}) {
        throw Error(ErrorCode::Singular, "matrix has zero determinant");
    }
    return {e22 / d, -e12 / d, -e21 / d, e11 / d};
}

double max_abs_diff(const Mat2C& a, const Mat2C& b) { return (a - b).max_abs(); }

namespace {

// Real parts within rounding of each other (conjugate pairs) compare by imag.
bool lex_greater(Complex a, Complex b) {
    const double tie = 1e-13 * std::max(1.0, std::abs(a) + std::abs(b));
    if (std::abs(a.real() - b.real()) > tie) return a.real() > b.real();
    return a.imag() > b.imag();
}

}  // namespace

std::pair<Complex, Complex> eigenvalues2(const Mat2C& m) {
    const Complex tr = m.trace();
    const Complex det = m.det();
    const Complex disc = tr * tr - 4.0 * det;
    if (disc == Complex{0.0, 0.0}) {
        return {tr / 2.0, tr / 2.0};
    }
    Complex s = std::sqrt(disc);
    // Pick the sign that avoids cancellation, then recover the other root from
    // the product of roots.
    if (std::abs(tr + s) < std::abs(tr - s)) s = -s;
    const Complex l1 = (tr + s) / 2.0;
    const Complex l2 = (l1 != Complex{0.0, 0.0}) ? det / l1 : (tr - s) / 2.0;
    if (lex_greater(l2, l1)) return {l2, l1};
    return {l1, l2};
}

Polar principal_polar(Complex y) {
    const double r = std::abs(y);
    if (r == 0.0) {
        throw Error(ErrorCode::ZeroEigenvalue, "eigenvalue is zero; transition matrix is singular");
    }
    double theta = std::atan2(y.imag(), y.real());
    if (theta <= -kPi) theta = kPi;
    return {r, theta};
}

Complex log_branch(Complex y, long m) {
    const Polar polar = principal_polar(y);
    return {std::log(polar.modulus), polar.theta + 2.0 * kPi * static_cast<double>(m)};
}

Mat2C taylor_exp(const Mat2C& z, int terms) {
    Mat2C sum = Mat2C::identity();
    Mat2C term = Mat2C::identity();
    for (int k = 1; k <= terms; ++k) {
        term = term * z * Complex{1.0 / k, 0.0};
        sum = sum + term;
    }
    return sum;
}

Mat2C taylor_exp_squared(const Mat2C& z, int terms) {
    const double norm = 2.0 * z.max_abs();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Mat2C scaled = z * Complex{std::ldexp(1.0, -squarings), 0.0};
    Mat2C result = taylor_exp(scaled, terms);
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

bool is_double_eigenvalue(Complex l1, Complex l2) {
    return std::abs(l1 - l2) <= 1e-9 * std::max(1.0, std::abs(l1) + std::abs(l2));
}

namespace {

Complex sinhc(Complex d) {
    if (std::abs(d) < 1e-4) {
        const Complex d2 = d * d;
        return 1.0 + d2 / 6.0 + d2 * d2 / 120.0;
    }
    return std::sinh(d) / d;
}

}  // namespace

Mat2C closed_exp(const Mat2C& z) {
    const auto [l1, l2] = eigenvalues2(z);
    const Complex mu = z.trace() / 2.0;
    const Mat2C shifted = z - mu * Mat2C::identity();
    const Complex scale = std::exp(mu);
    if (is_double_eigenvalue(l1, l2)) {
        return scale * (Mat2C::identity() + shifted);
    }
    const Complex d = (l1 - l2) / 2.0;
    return scale * (std::cosh(d) * Mat2C::identity() + sinhc(d) * shifted);
}

}  // namespace shadowham
