#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowham/flow.hpp"
#include "shadowham/integrators.hpp"
#include "shadowham/shadow.hpp"

namespace shadowham {

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerificationReport {
    std::string subject;
    std::vector<Check> checks;

    /// Appends a check; passed is residual <= tolerance (NaN fails).
    void add(std::string name, double residual, double tolerance);
    void append(const VerificationReport& other);
    bool passed() const;
    std::size_t failures() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// Largest entry of |exp(Z) - R|, with exp(Z) evaluated by the Taylor series
/// (40 terms, scaled and squared when ||Z|| > 1/2). Tolerance 1e-9.
VerificationReport check_exponential(const Generator& g, const TransitionMatrix& r);

/// Continuous states exp(n Z)(q0, p0) against R^n (q0, p0) for n = 0..n_max
/// from `trials` random starts in [-1, 1]^2. The deviation is scaled by
/// max(1, |discrete state|). Tolerance 1e-8.
VerificationReport check_coincidence(const Generator& g, const TransitionMatrix& r,
                                     std::size_t trials, std::uint64_t seed = kDefaultSeed,
                                     std::size_t n_max = 20);

/// Relative drift of H along exp((t/tau) Z) sampled at tau/20 over [0, 10 tau].
/// The drift is measured against max(|H(0)|, |cA p^2| + |cB q^2| + |cC p q|)
/// so cancellation on growing orbits does not count as drift. Tolerance 1e-9.
VerificationReport check_conservation(const ShadowHamiltonian& h, const Generator& g,
                                      std::size_t trials, std::uint64_t seed = kDefaultSeed);

/// |det exp((t/tau) Z) - 1| / max(1, |ad| + |bc|) over the same samples as
/// check_conservation. Tolerance 1e-10.
VerificationReport check_volume(const Generator& g);

/// Imaginary parts of exp(n Z)(q0, p0), n = 0..n_max, scaled by max(1, |state|).
/// Tolerance 1e-9.
VerificationReport check_real_at_steps(const Generator& g, double q0, double p0,
                                       std::size_t n_max = 10);

/// Critical time-increments of the vp composite in (0, 5]: the bisected root of
/// trace = -2 near 2.48 and the exact root at 4.
std::vector<double> vp_critical_taus();

/// Case stated for `integrator` at `tau`, or nullopt where no claim is made.
/// Throws ErrorCode::UnknownIntegrator for names outside the built-ins.
std::optional<CaseTag> expected_case(std::string_view integrator, double tau);

/// Classifies each tau and compares with expected_case; one check per tau,
/// residual 0 on match and 1 on mismatch.
VerificationReport check_regime_map(std::string_view integrator, const std::vector<double>& tau_grid);

/// First return time of the flow through (q0, p0): the first crossing of the
/// line through the start normal to the initial velocity, located on a grid of
/// spacing `step` and refined by bisection, accepted only if
/// |state - start| <= 1e-6 there.
std::optional<double> measure_period(const Generator& g, double q0, double p0, double step,
                                     double t_max);

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Adds 1e-3 to Z1 of every generator before checking (negative control).
    bool inject_fault = false;
};

/// Full check suite over the built-in integrators and regime maps.
VerificationReport run_suite(const SuiteOptions& options = {});

}  // namespace shadowham
