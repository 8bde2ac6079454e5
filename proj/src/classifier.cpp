#include "shadowham/classifier.hpp"

#include <cmath>
#include <sstream>

namespace shadowham {

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::IA: return "i-a";
        case CaseTag::IB: return "i-b";
        case CaseTag::IC: return "i-c";
        case CaseTag::IIPlus: return "ii(+)";
        case CaseTag::IIMinus: return "ii(-)";
        case CaseTag::IIIA: return "iii-a";
        case CaseTag::IIIB: return "iii-b";
    }
    return "?";
}

std::optional<CaseTag> case_from_string(std::string_view label) {
    for (CaseTag tag : {CaseTag::IA, CaseTag::IB, CaseTag::IC, CaseTag::IIPlus, CaseTag::IIMinus,
                        CaseTag::IIIA, CaseTag::IIIB}) {
        if (to_string(tag) == label) return tag;
    }
    return std::nullopt;
}

namespace {

bool near_scalar_identity(const TransitionMatrix& r, double sign, double tol) {
    return std::abs(r.r1() - sign) <= tol && std::abs(r.r4() - sign) <= tol &&
           std::abs(r.r2()) <= tol && std::abs(r.r3()) <= tol;
}

JordanData build_jordan(const TransitionMatrix& r, double sign) {
    const double n11 = r.r1() - sign, n12 = r.r2(), n21 = r.r3(), n22 = r.r4() - sign;
    const double norm1 = std::hypot(n11, n21);
    const double norm2 = std::hypot(n12, n22);
    double v1, v2;
    if (norm1 >= norm2) {
        v1 = n11 / norm1;
        v2 = n21 / norm1;
    } else {
        v1 = n12 / norm2;
        v2 = n22 / norm2;
    }
    // N = v k^T for a rank-one nilpotent N, so N w = v is solved by k / |k|^2.
    const double k1 = v1 * n11 + v2 * n21;
    const double k2 = v1 * n12 + v2 * n22;
    const double kk = k1 * k1 + k2 * k2;
    const double w1 = k1 / kk, w2 = k2 / kk;

    JordanData data;
    data.p = {v1, w1, v2, w2};
    data.j = {sign, 1.0, 0.0, sign};
    data.residual = max_abs_diff(data.p * data.j * data.p.inverse(), r.as_complex());
    return data;
}

}  // namespace

Classification classify(const TransitionMatrix& r, double tol) {
    const double det = r.det();
    const double det_scale = std::max(1.0, std::abs(r.r1() * r.r4()) + std::abs(r.r2() * r.r3()));
    if (std::abs(det - 1.0) > 1e-6 * det_scale) {
        std::ostringstream msg;
        msg << "det R = " << det;
        throw Error(ErrorCode::Singular, msg.str());
    }

    const double t = r.trace();
    EigenStructure es;
    es.trace = t;
    // T^2 - 4 det without the cancellation of (T - 2)(T + 2) near T = +-2.
    const double dr = r.r1() - r.r4();
    const double disc = dr * dr + 4.0 * r.r2() * r.r3();
    es.criticality = std::abs(disc);

    CaseTag tag;
    if (es.criticality > tol) {
        const double gap = std::sqrt(es.criticality);
        if (disc < 0.0) {
            tag = CaseTag::IA;
            es.y = Complex{t / 2.0, gap / 2.0};
        } else if (t > 0.0) {
            tag = CaseTag::IB;
            es.y = Complex{(t + gap) / 2.0, 0.0};
        } else {
            tag = CaseTag::IC;
            es.y = Complex{2.0 / (t - gap), 0.0};
        }
    } else {
        const double sign = t > 0.0 ? 1.0 : -1.0;
        es.degenerate = true;
        es.y = Complex{sign, 0.0};
        if (near_scalar_identity(r, sign, tol)) {
            tag = sign > 0 ? CaseTag::IIPlus : CaseTag::IIMinus;
        } else {
            tag = sign > 0 ? CaseTag::IIIA : CaseTag::IIIB;
            es.jordan = build_jordan(r, sign);
        }
    }
    const Polar polar = principal_polar(es.y);
    es.theta = polar.theta;
    es.modulus = polar.modulus;
    return {tag, es};
}

EigenStructure jordan_decompose(const TransitionMatrix& r, double tol) {
    const Classification c = classify(r, tol);
    if (c.tag != CaseTag::IIIA && c.tag != CaseTag::IIIB) {
        throw Error(ErrorCode::NotDefective,
                    "matrix is classified " + std::string(to_string(c.tag)) + ", not defective");
    }
    return c.eigen;
}

}  // namespace shadowham
