#include "shadowham/shadow.hpp"

#include <cmath>
#include <sstream>

namespace shadowham {

CaseIIParams CaseIIParams::project(Complex c1, Complex c2, Complex c3) {
    const Complex s = c1 * c1 + c2 * c3;
    if (std::abs(s) == 0.0) {
        throw Error(ErrorCode::BadParams, "c1^2 + c2 c3 vanishes; cannot rescale onto the constraint");
    }
    const Complex root = std::sqrt(s);
    return {c1 / root, c2 / root, c3 / root};
}

namespace {

bool is_distinct(CaseTag tag) {
    return tag == CaseTag::IA || tag == CaseTag::IB || tag == CaseTag::IC;
}

bool coefficients_real(Complex a, Complex b, Complex c) {
    return std::abs(a.imag()) + std::abs(b.imag()) + std::abs(c.imag()) <= kRealTol;
}

}  // namespace

Generator generator_distinct(const TransitionMatrix& r, const EigenStructure& es, long m) {
    const Complex y = es.y;
    const Complex inv_y = 1.0 / y;
    const Complex scale = log_branch(y, m) / (y - inv_y);
    // y + 1/y equals the trace; using T keeps Z1 exactly zero when R1 = R4.
    const Mat2C shifted = 2.0 * r.as_complex() - Complex{es.trace, 0.0} * Mat2C::identity();

    CaseTag tag = CaseTag::IA;
    if (es.theta == 0.0) tag = CaseTag::IB;
    else if (es.theta == kPi) tag = CaseTag::IC;
    return {scale * shifted, m, r.tau(), tag};
}

Generator generator_scalar(const TransitionMatrix& r, long m, const CaseIIParams& params,
                           bool require_nontrivial) {
    const Classification c = classify(r);
    if (c.tag != CaseTag::IIPlus && c.tag != CaseTag::IIMinus) {
        throw Error(ErrorCode::NotApplicable,
                    "scalar generator needs R = +-I, got " + std::string(to_string(c.tag)));
    }
    if (std::abs(params.constraint() - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "c1^2 + c2 c3 = " << params.constraint() << ", expected 1";
        throw Error(ErrorCode::BadParams, msg.str());
    }
    // 4m + 1 - 1 for R = I, 4m + 1 + 1 for R = -I.
    const double offset = c.tag == CaseTag::IIPlus ? 0.0 : 2.0;
    const Complex x1{0.0, kPi * (4.0 * static_cast<double>(m) + offset) / 2.0};
    if (require_nontrivial && x1 == Complex{0.0, 0.0}) {
        throw Error(ErrorCode::DegenerateBranch, "R = I with m = 0 gives the zero generator");
    }
    const Mat2C shape{params.c1, params.c2, params.c3, -params.c1};
    return {x1 * shape, m, r.tau(), c.tag};
}

Generator generator_jordan(const TransitionMatrix& r, double tol) {
    const Classification c = classify(r, tol);
    if (c.tag == CaseTag::IIIB) {
        throw NoHamiltonianError(
            {c.tag, c.eigen, "defective eigenvalue -1: no traceless logarithm exists"});
    }
    if (c.tag != CaseTag::IIIA) {
        throw Error(ErrorCode::NotApplicable,
                    "Jordan generator needs case iii-a, got " + std::string(to_string(c.tag)));
    }
    return {r.as_complex() - Mat2C::identity(), 0, r.tau(), CaseTag::IIIA};
}

Generator make_generator(const TransitionMatrix& r, const Classification& c, long m,
                         const CaseIIParams& params) {
    switch (c.tag) {
        case CaseTag::IA:
        case CaseTag::IB:
        case CaseTag::IC:
            return generator_distinct(r, c.eigen, m);
        case CaseTag::IIPlus:
        case CaseTag::IIMinus:
            return generator_scalar(r, m, params);
        case CaseTag::IIIA:
        case CaseTag::IIIB:
            return generator_jordan(r);
    }
    throw Error(ErrorCode::NotApplicable, "unhandled case");
}

ShadowHamiltonian hamiltonian_from_generator(const Generator& g) {
    const Complex tr = g.z.trace();
    if (std::abs(tr) > 1e-10 * std::max(1.0, g.z.max_abs())) {
        std::ostringstream msg;
        msg << "tr Z = " << tr;
        throw Error(ErrorCode::NotTraceless, msg.str());
    }
    ShadowHamiltonian h;
    h.cA = g.z.e12 / (2.0 * g.tau);
    h.cB = -g.z.e21 / (2.0 * g.tau);
    h.cC = g.z.e11 / g.tau;
    h.tau = g.tau;
    h.m = g.m;
    h.case_tag = g.case_tag;
    h.real_valued = coefficients_real(h.cA, h.cB, h.cC);
    return h;
}

Complex euler_lambda(double tau, long m) {
    if (!(tau > 0.0)) {
        throw Error(ErrorCode::InvalidTau, "time-increment must be positive");
    }
    if (tau == 2.0) {
        throw Error(ErrorCode::CriticalTau, "tau = 2 is the defective point of symplectic Euler");
    }
    const double md = static_cast<double>(m);
    if (tau < 2.0) {
        // acos keeps lambda_0 in (0, pi); asin would fold it into (0, pi/2].
        return {2.0 * md * kPi + std::acos(1.0 - tau * tau / 2.0), 0.0};
    }
    const double arg = tau * tau - 2.0 + tau * std::sqrt(tau * tau - 4.0);
    return {std::log(2.0) - std::log(arg), (2.0 * md + 1.0) * kPi};
}

ShadowHamiltonian euler_closed_hamiltonian(double tau, long m) {
    const Complex lambda = euler_lambda(tau, m);
    const double root = std::sqrt(std::abs(4.0 - tau * tau));
    const Complex c = lambda / (tau * root);
    ShadowHamiltonian h;
    h.cA = c;
    h.cB = c;
    h.cC = -tau * c;
    h.tau = tau;
    h.m = m;
    h.case_tag = tau < 2.0 ? CaseTag::IA : CaseTag::IC;
    h.real_valued = coefficients_real(h.cA, h.cB, h.cC);
    h.lambda = lambda;
    return h;
}

BranchSet enumerate_branches(const TransitionMatrix& r, long m_min, long m_max,
                             const std::optional<CaseIIParams>& params, double tol) {
    BranchSet set{classify(r, tol), {}, {}, std::nullopt};
    const CaseTag tag = set.classification.tag;
    if (tag == CaseTag::IIIB) {
        set.no_hamiltonian = NoHamiltonianReport{
            tag, set.classification.eigen, "defective eigenvalue -1: no traceless logarithm exists"};
        return set;
    }
    if (tag == CaseTag::IIIA) {
        set.generators.push_back(generator_jordan(r, tol));
    } else {
        for (long m = m_min; m <= m_max; ++m) {
            if (is_distinct(tag)) {
                set.generators.push_back(generator_distinct(r, set.classification.eigen, m));
            } else {
                set.generators.push_back(
                    generator_scalar(r, m, params.value_or(CaseIIParams::defaults())));
            }
        }
    }
    const bool euler_source = r.label() == "euler";
    for (const Generator& g : set.generators) {
        ShadowHamiltonian h = hamiltonian_from_generator(g);
        if (euler_source && is_distinct(tag) && r.tau() != 2.0) {
            h.lambda = euler_lambda(r.tau(), g.m);
        }
        set.hamiltonians.push_back(h);
    }
    return set;
}

}  // namespace shadowham
