#pragma once

#include <doctest.h>

#include <complex>
#include <random>

#include "shadowham/algebra.hpp"

namespace shadowham::testing {

/// Random complex 2x2 matrix with entries uniform in the disc-bounding square
/// [-bound, bound]^2.
inline Mat2C random_matrix(std::mt19937_64& rng, double bound) {
    std::uniform_real_distribution<double> d(-bound, bound);
    auto c = [&] {
        const double re = d(rng);
        const double im = d(rng);
        return Complex{re, im};
    };
    Mat2C m;
    m.e11 = c();
    m.e12 = c();
    m.e21 = c();
    m.e22 = c();
    return m;
}

/// Plain product oracle, written out independently of Mat2C::operator*.
inline void matmul(const double a[4], const double b[4], double out[4]) {
    out[0] = a[0] * b[0] + a[1] * b[2];
    out[1] = a[0] * b[1] + a[1] * b[3];
    out[2] = a[2] * b[0] + a[3] * b[2];
    out[3] = a[2] * b[1] + a[3] * b[3];
}

/// Code of the shadowham::Error thrown by fn; fails the test if none is thrown.
template <class Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a shadowham::Error");
    return ErrorCode::NotApplicable;
}

}  // namespace shadowham::testing
