#include "shadowham/integrators.hpp"

#include <cmath>
#include <sstream>

namespace shadowham {

namespace {

void require_tau(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        std::ostringstream msg;
        msg << "time-increment must be positive and finite, got " << tau;
        throw Error(ErrorCode::InvalidTau, msg.str());
    }
}

}  // namespace

TransitionMatrix::TransitionMatrix(Unchecked, double r1, double r2, double r3, double r4,
                                   double tau, std::string label)
    : r1_(r1), r2_(r2), r3_(r3), r4_(r4), tau_(tau), label_(std::move(label)) {}

TransitionMatrix::TransitionMatrix(double r1, double r2, double r3, double r4, double tau,
                                   std::string label)
    : TransitionMatrix(Unchecked{}, r1, r2, r3, r4, tau, std::move(label)) {
    require_tau(tau);
    const double residual = det() - 1.0;
    // Relative to the size of the products so that large-tau composites pass.
    const double scale = std::max(1.0, std::abs(r1 * r4) + std::abs(r2 * r3));
    if (std::abs(residual) > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "det - 1 = " << residual;
        throw Error(ErrorCode::NotSymplectic, msg.str());
    }
}

TransitionMatrix euler(double tau) {
    require_tau(tau);
    return {1.0 - tau * tau, tau, -tau, 1.0, tau, "euler"};
}

TransitionMatrix velocity_verlet(double tau) {
    require_tau(tau);
    const double diag = 1.0 - tau * tau / 2.0;
    return {diag, tau, tau * tau * tau / 4.0 - tau, diag, tau, "velocity-verlet"};
}

TransitionMatrix position_verlet(double tau) {
    require_tau(tau);
    const double diag = 1.0 - tau * tau / 2.0;
    return {diag, tau - tau * tau * tau / 4.0, -tau, diag, tau, "position-verlet"};
}

TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b) {
    return {a.r1() * b.r1() + a.r2() * b.r3(),
            a.r1() * b.r2() + a.r2() * b.r4(),
            a.r3() * b.r1() + a.r4() * b.r3(),
            a.r3() * b.r2() + a.r4() * b.r4(),
            a.tau() + b.tau(),
            a.label() + "*" + b.label()};
}

TransitionMatrix double_euler(double tau) {
    require_tau(tau);
    const TransitionMatrix half = euler(tau / 2.0);
    const TransitionMatrix product = compose(half, half);
    return {product.r1(), product.r2(), product.r3(), product.r4(), tau, "double-euler"};
}

TransitionMatrix vp(double tau) {
    require_tau(tau);
    const TransitionMatrix product = compose(velocity_verlet(tau / 2.0), position_verlet(tau / 2.0));
    return {product.r1(), product.r2(), product.r3(), product.r4(), tau, "vp"};
}

TransitionMatrix custom(double r1, double r2, double r3, double r4, double tau) {
    require_tau(tau);
    for (double v : {r1, r2, r3, r4}) {
        if (!std::isfinite(v)) throw Error(ErrorCode::NotSymplectic, "non-finite matrix entry");
    }
    const double residual = r1 * r4 - r2 * r3 - 1.0;
    if (std::abs(residual) > 1e-9) {
        std::ostringstream msg;
        msg << "det - 1 = " << residual;
        throw Error(ErrorCode::NotSymplectic, msg.str());
    }
    if (std::abs(r1) > 1e-12) {
        r4 = (1.0 + r2 * r3) / r1;
    } else if (std::abs(r2) > 1e-12) {
        r3 = (r1 * r4 - 1.0) / r2;
    }
    return {TransitionMatrix::Unchecked{}, r1, r2, r3, r4, tau, "custom"};
}

TransitionMatrix make_integrator(std::string_view name, double tau,
                                 std::optional<std::array<double, 4>> entries) {
    if (name == "euler") return euler(tau);
    if (name == "velocity-verlet") return velocity_verlet(tau);
    if (name == "position-verlet") return position_verlet(tau);
    if (name == "double-euler") return double_euler(tau);
    if (name == "vp") return vp(tau);
    if (name == "custom") {
        if (!entries) throw Error(ErrorCode::NotSymplectic, "custom integrator needs four entries");
        const auto& r = *entries;
        return custom(r[0], r[1], r[2], r[3], tau);
    }
    throw Error(ErrorCode::UnknownIntegrator, std::string(name));
}

}  // namespace shadowham
