#include "shadowham/flow.hpp"

#include <cmath>

namespace shadowham {

Trajectory discrete_orbit(const TransitionMatrix& r, double q0, double p0, std::size_t n) {
    Trajectory traj;
    traj.source = {r.label(), std::nullopt, std::nullopt, r.tau()};
    traj.states.reserve(n + 1);
    double q = q0, p = p0;
    traj.states.push_back({q, p, 0.0});
    for (std::size_t k = 1; k <= n; ++k) {
        const double qn = r.r1() * q + r.r2() * p;
        const double pn = r.r3() * q + r.r4() * p;
        q = qn;
        p = pn;
        traj.states.push_back({q, p, static_cast<double>(k) * r.tau()});
    }
    return traj;
}

Mat2C flow_map(const Generator& g, double t) { return closed_exp(Complex{t / g.tau, 0.0} * g.z); }

PhaseState continuous_state(const Generator& g, double q0, double p0, double t) {
    const Vec2C v = flow_map(g, t) * Vec2C{q0, p0};
    return {v.q, v.p, t};
}

PhaseState euler_closed_form(double tau, long m, double q0, double p0, double t) {
    const Complex lambda = euler_lambda(tau, m);
    const Complex tm = lambda * (t / tau);
    Complex s, c;
    double root;
    if (tau < 2.0) {
        s = std::sin(tm);
        c = std::cos(tm);
        root = std::sqrt(4.0 - tau * tau);
    } else {
        s = std::sinh(tm);
        c = std::cosh(tm);
        root = std::sqrt(tau * tau - 4.0);
    }
    const Complex q = (2.0 * p0 - tau * q0) * s / root + q0 * c;
    const Complex p = (tau * p0 - 2.0 * q0) * s / root + p0 * c;
    return {q, p, t};
}

Trajectory sample_trajectory(const Generator& g, double q0, double p0, double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end >= 0.0)) {
        throw Error(ErrorCode::InvalidTau, "sampling needs dt > 0 and t_end >= 0");
    }
    Trajectory traj;
    traj.source = {"", g.case_tag, g.m, g.tau};
    const double guard = 1e-12 * std::max(1.0, t_end);
    for (std::size_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (t >= t_end - guard) break;
        traj.states.push_back(continuous_state(g, q0, p0, t));
    }
    traj.states.push_back(continuous_state(g, q0, p0, t_end));
    return traj;
}

std::string_view to_string(Rotation r) {
    return r == Rotation::Clockwise ? "clockwise" : "counter-clockwise";
}

Rotation rotation_sense(const ShadowHamiltonian& h) {
    if (h.case_tag != CaseTag::IA) {
        throw Error(ErrorCode::NotApplicable,
                    "rotation sense is defined for bounded real orbits (i-a) only");
    }
    // dp/dt = -dH/dq = -2 cB at (q, p) = (1, 0).
    const double pdot = -2.0 * h.cB.real();
    return pdot < 0.0 ? Rotation::Clockwise : Rotation::CounterClockwise;
}

}  // namespace shadowham
