#include <doctest.h>

#include <cmath>
#include <random>

#include "shadowham/flow.hpp"
#include "test_support.hpp"

using namespace shadowham;
using testing::code_of;

namespace {

Generator distinct(const TransitionMatrix& r, long m) {
    return generator_distinct(r, classify(r).eigen, m);
}

double state_gap(const PhaseState& a, Complex q, Complex p) {
    return std::hypot(std::abs(a.q - q), std::abs(a.p - p));
}

}  // namespace

TEST_CASE("discrete_orbit") {
    const Trajectory orbit = discrete_orbit(euler(0.66), 1.0, 0.0, 6);
    REQUIRE(orbit.states.size() == 7);
    CHECK(orbit.states[0].q == Complex{1.0});
    CHECK(std::abs(orbit.states[1].q - 0.5644) <= 1e-15);
    CHECK(std::abs(orbit.states[1].p + 0.66) <= 1e-15);
    CHECK(orbit.states[6].t == doctest::Approx(6 * 0.66));
    CHECK(orbit.source.integrator == "euler");
    CHECK_FALSE(orbit.source.m);
    for (std::size_t k = 1; k < orbit.states.size(); ++k) CHECK(orbit.states[k].t > orbit.states[k - 1].t);
}

TEST_CASE("continuous_state interpolates the discrete orbit") {
    for (long m : {0L, 1L, -1L}) {
        const TransitionMatrix r = euler(0.66);
        const Generator g = distinct(r, m);
        const Trajectory orbit = discrete_orbit(r, 1.0, 0.0, 6);
        for (const PhaseState& s : orbit.states) {
            CHECK(state_gap(continuous_state(g, 1.0, 0.0, s.t), s.q, s.p) <= 1e-12);
        }
    }
}

TEST_CASE("interpolation holds for random matrices and starts") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> tau_d(0.05, 5.0), x(-1.0, 1.0);
    int tested = 0;
    for (int i = 0; i < 300; ++i) {
        const double tau = tau_d(rng);
        const TransitionMatrix r = (i % 3 == 0) ? euler(tau) : (i % 3 == 1) ? vp(tau) : position_verlet(tau);
        const Classification c = classify(r);
        if (c.tag != CaseTag::IA && c.tag != CaseTag::IB && c.tag != CaseTag::IC) continue;
        const long m = static_cast<long>(i % 5) - 2;
        const Generator g = generator_distinct(r, c.eigen, m);
        const double q0 = x(rng), p0 = x(rng);
        const Trajectory orbit = discrete_orbit(r, q0, p0, 8);
        for (const PhaseState& s : orbit.states) {
            const double scale = std::max(1.0, std::hypot(s.q.real(), s.p.real()));
            CHECK(state_gap(continuous_state(g, q0, p0, s.t), s.q, s.p) <= 1e-8 * scale);
        }
        ++tested;
    }
    CHECK(tested > 250);
}

TEST_CASE("euler_closed_form matches the generic flow") {
    for (double tau : {0.3, 0.66, 1.0, 1.9, 2.5, 3.0, 4.0}) {
        for (long m = -2; m <= 2; ++m) {
            const Generator g = distinct(euler(tau), m);
            for (double t : {0.0, 0.1, tau, 2.7 * tau, 5.0 * tau}) {
                const PhaseState a = euler_closed_form(tau, m, 0.4, -0.7, t);
                const PhaseState b = continuous_state(g, 0.4, -0.7, t);
                const double scale = std::max(1.0, std::hypot(std::abs(b.q), std::abs(b.p)));
                CHECK(state_gap(a, b.q, b.p) <= 1e-9 * scale);
            }
        }
    }
    CHECK(code_of([] { euler_closed_form(2.0, 0, 1.0, 0.0, 1.0); }) == ErrorCode::CriticalTau);
}

TEST_CASE("sample_trajectory") {
    const Generator g = distinct(euler(0.66), 0);
    SUBCASE("t_end = 0 gives one sample") {
        const Trajectory traj = sample_trajectory(g, 1.0, 0.0, 0.0, 0.1);
        REQUIRE(traj.states.size() == 1);
        CHECK(traj.states[0].q == Complex{1.0});
    }
    SUBCASE("the last sample lands on t_end") {
        const Trajectory traj = sample_trajectory(g, 1.0, 0.0, 1.0, 0.3);
        REQUIRE(traj.states.size() == 5);
        CHECK(traj.states.back().t == 1.0);
        CHECK(traj.source.m == 0L);
        REQUIRE(traj.source.case_tag);
        CHECK(*traj.source.case_tag == CaseTag::IA);
        // 0.3 * 10 lands within rounding of 3.0; no duplicate sample.
        const Trajectory even = sample_trajectory(g, 1.0, 0.0, 3.0, 0.3);
        CHECK(even.states.size() == 11);
    }
    SUBCASE("halving dt reproduces the coarse samples") {
        const Trajectory coarse = sample_trajectory(g, 1.0, 0.0, 4.0, 0.25);
        const Trajectory fine = sample_trajectory(g, 1.0, 0.0, 4.0, 0.125);
        REQUIRE(fine.states.size() == 2 * coarse.states.size() - 1);
        for (std::size_t k = 0; k < coarse.states.size(); ++k) {
            const PhaseState& f = fine.states[2 * k];
            CHECK(f.t == coarse.states[k].t);
            CHECK(state_gap(f, coarse.states[k].q, coarse.states[k].p) <= 1e-13);
        }
    }
    SUBCASE("invalid sampling") {
        CHECK(code_of([&] { sample_trajectory(g, 1.0, 0.0, 1.0, 0.0); }) == ErrorCode::InvalidTau);
        CHECK(code_of([&] { sample_trajectory(g, 1.0, 0.0, -1.0, 0.1); }) == ErrorCode::InvalidTau);
    }
}

TEST_CASE("rotation_sense") {
    const TransitionMatrix r = euler(0.66);
    auto sense = [&](long m) { return rotation_sense(hamiltonian_from_generator(distinct(r, m))); };
    CHECK(sense(0) == Rotation::Clockwise);
    CHECK(sense(1) == Rotation::Clockwise);
    CHECK(sense(-1) == Rotation::CounterClockwise);
    CHECK(to_string(Rotation::Clockwise) == "clockwise");
    CHECK(code_of([] { rotation_sense(hamiltonian_from_generator(distinct(euler(3.0), 0))); }) ==
          ErrorCode::NotApplicable);

    // Cross-check against the flow: starting at (1, 0), p decreases first.
    const Generator g = distinct(r, 0);
    CHECK(continuous_state(g, 1.0, 0.0, 1e-3).p.real() < 0.0);
    CHECK(continuous_state(distinct(r, -1), 1.0, 0.0, 1e-3).p.real() > 0.0);
}

TEST_CASE("complex regime orbits diverge") {
    for (double tau : {2.5, 3.0, 4.0}) {
        for (long m : {0L, 1L}) {
            const PhaseState s = continuous_state(distinct(euler(tau), m), 1.0, 0.0, 10.0 * tau);
            CHECK(std::abs(s.q) > 1e3);
            CHECK(std::abs(s.q.imag()) <= 1e-9 * std::max(1.0, std::abs(s.q)));
        }
    }
}

TEST_CASE("the flow map is a one-parameter group") {
    const Generator g = distinct(vp(1.1), 1);
    for (double s : {0.2, 1.3}) {
        for (double t : {0.5, 2.0}) {
            const Mat2C lhs = flow_map(g, s) * flow_map(g, t);
            CHECK(max_abs_diff(lhs, flow_map(g, s + t)) <= 1e-12 * std::max(1.0, lhs.max_abs()));
        }
    }
}
