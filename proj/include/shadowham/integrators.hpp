#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowham/algebra.hpp"

namespace shadowham {

/// Real symplectic one-step map R(tau) of the unit oscillator H0 = (q^2 + p^2)/2,
/// acting on column vectors (q, p).  det R = 1.
class TransitionMatrix {
public:
    /// Validates tau > 0 and |det - 1| <= 1e-12; used by the built-in builders.
    TransitionMatrix(double r1, double r2, double r3, double r4, double tau, std::string label);

    double r1() const { return r1_; }
    double r2() const { return r2_; }
    double r3() const { return r3_; }
    double r4() const { return r4_; }
    double tau() const { return tau_; }
    const std::string& label() const { return label_; }

    double trace() const { return r1_ + r4_; }
    double det() const { return r1_ * r4_ - r2_ * r3_; }
    Mat2C as_complex() const { return {r1_, r2_, r3_, r4_}; }

private:
    friend TransitionMatrix custom(double, double, double, double, double);
    struct Unchecked {};
    TransitionMatrix(Unchecked, double r1, double r2, double r3, double r4, double tau,
                     std::string label);

    double r1_, r2_, r3_, r4_;
    double tau_;
    std::string label_;
};

TransitionMatrix euler(double tau);
/// Kick(tau/2) drift(tau) kick(tau/2).
TransitionMatrix velocity_verlet(double tau);
/// Drift(tau/2) kick(tau) drift(tau/2).
TransitionMatrix position_verlet(double tau);

/// Matrix product a*b (b acts first); tau adds up and labels concatenate.
TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b);

/// R_E(tau/2) R_E(tau/2).
TransitionMatrix double_euler(double tau);
/// R_v(tau/2) R_p(tau/2).
TransitionMatrix vp(double tau);

/// User-supplied matrix. Accepts |det - 1| <= 1e-9 and then projects one
/// entry to restore det == 1; otherwise throws ErrorCode::NotSymplectic.
TransitionMatrix custom(double r1, double r2, double r3, double r4, double tau);

/// Stable identifiers accepted by make_integrator and the CLI.
inline constexpr std::array<std::string_view, 5> kBuiltinIntegrators = {
    "euler", "velocity-verlet", "position-verlet", "double-euler", "vp"};

/// Builds a named integrator. "custom" requires entries; unknown names throw
/// ErrorCode::UnknownIntegrator.
TransitionMatrix make_integrator(std::string_view name, double tau,
                                 std::optional<std::array<double, 4>> entries = std::nullopt);

}  // namespace shadowham
