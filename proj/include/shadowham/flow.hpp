#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowham/algebra.hpp"
#include "shadowham/classifier.hpp"
#include "shadowham/integrators.hpp"
#include "shadowham/shadow.hpp"

namespace shadowham {

struct PhaseState {
    Complex q, p;
    double t = 0.0;
};

struct TrajectorySource {
    std::string integrator;
    std::optional<CaseTag> case_tag;
    std::optional<long> m;  // empty for the discrete orbit
    double tau = 0.0;
};

/// States ordered by strictly increasing t.
struct Trajectory {
    std::vector<PhaseState> states;
    TrajectorySource source;
};

/// States at t = 0, tau, ..., n tau by repeated application of R.
Trajectory discrete_orbit(const TransitionMatrix& r, double q0, double p0, std::size_t n);

/// exp((t / tau) Z).
Mat2C flow_map(const Generator& g, double t);

PhaseState continuous_state(const Generator& g, double q0, double p0, double t);

/// Trigonometric (0 < tau < 2) or hyperbolic (tau > 2) closed form of the
/// symplectic Euler flow with t_m = lambda_m t / tau.
PhaseState euler_closed_form(double tau, long m, double q0, double p0, double t);

/// Samples at t = k dt while k dt < t_end, then one final sample at exactly
/// t_end. Each sample uses its own matrix exponential.
Trajectory sample_trajectory(const Generator& g, double q0, double p0, double t_end, double dt);

enum class Rotation { Clockwise, CounterClockwise };

std::string_view to_string(Rotation r);

/// Sense of rotation in the (q, p) plane, read from the sign of dp/dt at
/// (1, 0).  Only defined for case i-a.
Rotation rotation_sense(const ShadowHamiltonian& h);

}  // namespace shadowham
