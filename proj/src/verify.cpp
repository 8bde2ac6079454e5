#include "shadowham/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace shadowham {

void VerificationReport::add(std::string name, double residual, double tolerance) {
    checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

std::string describe(const std::string& label, double tau, long m) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s tau=%.6g m=%ld", label.c_str(), tau, m);
    return buf;
}

std::vector<std::pair<double, double>> random_starts(std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::pair<double, double>> starts;
    starts.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i) {
        const double q = dist(rng);
        const double p = dist(rng);
        starts.emplace_back(q, p);
    }
    return starts;
}

double state_norm(Complex q, Complex p) { return std::hypot(std::abs(q), std::abs(p)); }

}  // namespace

VerificationReport check_exponential(const Generator& g, const TransitionMatrix& r) {
    VerificationReport report;
    report.subject = describe(r.label(), r.tau(), g.m);
    const double residual = max_abs_diff(taylor_exp_squared(g.z, 40), r.as_complex());
    report.add("exp-identity", residual, 1e-9);
    return report;
}

VerificationReport check_coincidence(const Generator& g, const TransitionMatrix& r,
                                     std::size_t trials, std::uint64_t seed, std::size_t n_max) {
    VerificationReport report;
    report.subject = describe(r.label(), r.tau(), g.m);
    double worst = 0.0;
    for (const auto& [q0, p0] : random_starts(trials, seed)) {
        // Oracle: repeated matrix-vector products.
        double q = q0, p = p0;
        for (std::size_t n = 0; n <= n_max; ++n) {
            const PhaseState s = continuous_state(g, q0, p0, static_cast<double>(n) * g.tau);
            const double dev = state_norm(s.q - q, s.p - p) / std::max(1.0, std::hypot(q, p));
            worst = std::max(worst, std::isnan(dev) ? INFINITY : dev);
            const double qn = r.r1() * q + r.r2() * p;
            p = r.r3() * q + r.r4() * p;
            q = qn;
        }
    }
    report.add("coincidence", worst, 1e-8);
    return report;
}

namespace {

std::vector<double> conservation_times(double tau) {
    std::vector<double> times;
    for (int k = 0; k <= 200; ++k) times.push_back(tau * k / 20.0);
    return times;
}

}  // namespace

VerificationReport check_conservation(const ShadowHamiltonian& h, const Generator& g,
                                      std::size_t trials, std::uint64_t seed) {
    VerificationReport report;
    report.subject = describe("hamiltonian", g.tau, g.m);
    double worst = 0.0;
    for (const auto& [q0, p0] : random_starts(trials, seed)) {
        const Complex h0 = h(q0, p0);
        for (double t : conservation_times(g.tau)) {
            const PhaseState s = continuous_state(g, q0, p0, t);
            const double terms = std::abs(h.cA * s.p * s.p) + std::abs(h.cB * s.q * s.q) +
                                 std::abs(h.cC * s.p * s.q);
            const double scale = std::max(std::abs(h0), terms);
            const double drift = std::abs(h(s.q, s.p) - h0);
            if (drift == 0.0) continue;
            const double rel = scale > 0.0 ? drift / scale : INFINITY;
            worst = std::max(worst, std::isnan(rel) ? INFINITY : rel);
        }
    }
    report.add("conservation", worst, 1e-9);
    return report;
}

VerificationReport check_volume(const Generator& g) {
    VerificationReport report;
    report.subject = describe("flow", g.tau, g.m);
    double worst = 0.0;
    for (double t : conservation_times(g.tau)) {
        const Mat2C f = flow_map(g, t);
        const double scale = std::max(1.0, std::abs(f.e11 * f.e22) + std::abs(f.e12 * f.e21));
        const double dev = std::abs(f.det() - 1.0) / scale;
        worst = std::max(worst, std::isnan(dev) ? INFINITY : dev);
    }
    report.add("volume", worst, 1e-10);
    return report;
}

VerificationReport check_real_at_steps(const Generator& g, double q0, double p0, std::size_t n_max) {
    VerificationReport report;
    report.subject = describe("flow", g.tau, g.m);
    double worst = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const PhaseState s = continuous_state(g, q0, p0, static_cast<double>(n) * g.tau);
        const double imag = std::hypot(s.q.imag(), s.p.imag());
        worst = std::max(worst, imag / std::max(1.0, state_norm(s.q, s.p)));
    }
    report.add("real-at-steps", worst, 1e-9);
    return report;
}

std::vector<double> vp_critical_taus() {
    auto trace_gap = [](double tau) { return vp(tau).trace() + 2.0; };
    // trace(vp) passes through -2 between 2.4 and 2.5 and returns to it at 4.
    double lo = 2.4, hi = 2.5;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (trace_gap(mid) > 0.0) lo = mid;
        else hi = mid;
    }
    const double first = std::abs(trace_gap(lo)) <= std::abs(trace_gap(hi)) ? lo : hi;
    return {first, 4.0};
}

std::optional<CaseTag> expected_case(std::string_view integrator, double tau) {
    auto at = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, b); };
    if (integrator == "euler" || integrator == "velocity-verlet" || integrator == "position-verlet") {
        if (at(tau, 2.0)) return CaseTag::IIIB;
        return tau < 2.0 ? CaseTag::IA : CaseTag::IC;
    }
    if (integrator == "double-euler") {
        const double root8 = 2.0 * std::sqrt(2.0);
        if (at(tau, root8)) return CaseTag::IIMinus;
        if (at(tau, 4.0)) return CaseTag::IIIA;
        return tau < 4.0 ? CaseTag::IA : CaseTag::IB;
    }
    if (integrator == "vp") {
        const auto crit = vp_critical_taus();
        if (at(tau, crit[0]) || at(tau, crit[1])) return CaseTag::IIIB;
        if (tau < crit[0]) return CaseTag::IA;
        if (tau < crit[1]) return CaseTag::IC;
        if (tau <= 5.0) return CaseTag::IA;
        return std::nullopt;
    }
    if (integrator == "custom") return std::nullopt;
    throw Error(ErrorCode::UnknownIntegrator, std::string(integrator));
}

VerificationReport check_regime_map(std::string_view integrator, const std::vector<double>& tau_grid) {
    VerificationReport report;
    report.subject = "regime map " + std::string(integrator);
    for (double tau : tau_grid) {
        const std::optional<CaseTag> expected = expected_case(integrator, tau);
        if (!expected) continue;
        const Classification c = classify(make_integrator(integrator, tau));
        char name[128];
        std::snprintf(name, sizeof name, "regime %s tau=%.17g expect %s got %s",
                      std::string(integrator).c_str(), tau,
                      std::string(to_string(*expected)).c_str(),
                      std::string(to_string(c.tag)).c_str());
        report.add(name, c.tag == *expected ? 0.0 : 1.0, 0.0);
    }
    return report;
}

std::optional<double> measure_period(const Generator& g, double q0, double p0, double step,
                                     double t_max) {
    // Section through the start, normal to the initial velocity.
    const Vec2C v0 = g.z * Vec2C{q0, p0};
    const double vq = v0.q.real(), vp0 = v0.p.real();
    auto section = [&](double t) {
        const PhaseState s = continuous_state(g, q0, p0, t);
        return (s.q.real() - q0) * vq + (s.p.real() - p0) * vp0;
    };
    double prev_t = step;
    double prev = section(prev_t);
    for (double t = 2.0 * step; t <= t_max; t += step) {
        const double cur = section(t);
        if (prev < 0.0 && cur >= 0.0) {
            double lo = prev_t, hi = t;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                if (section(mid) < 0.0) lo = mid;
                else hi = mid;
            }
            const double period = 0.5 * (lo + hi);
            const PhaseState s = continuous_state(g, q0, p0, period);
            if (state_norm(s.q - q0, s.p - p0) <= 1e-6) return period;
        }
        prev_t = t;
        prev = cur;
    }
    return std::nullopt;
}

namespace {

void check_generator_family(VerificationReport& suite, const TransitionMatrix& r, const Generator& g0,
                            const SuiteOptions& options) {
    Generator g = g0;
    ShadowHamiltonian h = hamiltonian_from_generator(g0);
    if (options.inject_fault) g.z.e11 += 1e-3;

    const std::string prefix = describe(r.label(), r.tau(), g.m) + " ";
    auto merge = [&](const VerificationReport& part) {
        for (Check c : part.checks) {
            c.name = prefix + c.name;
            suite.checks.push_back(std::move(c));
        }
    };
    merge(check_exponential(g, r));
    merge(check_coincidence(g, r, 5, options.seed));
    merge(check_conservation(h, g, 3, options.seed));
    merge(check_volume(g));
}

}  // namespace

VerificationReport run_suite(const SuiteOptions& options) {
    VerificationReport suite;
    suite.subject = "shadowham suite";

    for (std::string_view name : kBuiltinIntegrators) {
        for (double tau : {0.3, 0.66, 1.5, 3.0}) {
            const TransitionMatrix r = make_integrator(name, tau);
            const BranchSet set = enumerate_branches(r, -2, 2);
            for (const Generator& g : set.generators) check_generator_family(suite, r, g, options);
        }
    }
    // Scalar and defective cases.
    const TransitionMatrix plus = custom(1, 0, 0, 1, 1.0);
    const TransitionMatrix minus = custom(-1, 0, 0, -1, 1.0);
    for (long m = -2; m <= 2; ++m) {
        check_generator_family(suite, plus, generator_scalar(plus, m), options);
        check_generator_family(suite, minus, generator_scalar(minus, m), options);
    }
    const TransitionMatrix jordan = double_euler(4.0);
    check_generator_family(suite, jordan, generator_jordan(jordan), options);

    const double root8 = 2.0 * std::sqrt(2.0);
    const auto vp_crit = vp_critical_taus();
    suite.append(check_regime_map("euler", {0.5, 1.0, 1.9, 2.0, 2.5, 3.0}));
    suite.append(check_regime_map("velocity-verlet", {0.5, 1.0, 1.9, 2.0, 2.5, 3.0}));
    suite.append(check_regime_map("position-verlet", {0.5, 1.0, 1.9, 2.0, 2.5, 3.0}));
    suite.append(check_regime_map("double-euler", {1.0, root8, 3.5, 4.0, 4.5}));
    suite.append(check_regime_map("vp", {1.0, vp_crit[0], 3.0, vp_crit[1], 4.5}));

    std::stable_sort(suite.checks.begin(), suite.checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    return suite;
}

}  // namespace shadowham
