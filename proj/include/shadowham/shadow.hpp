#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowham/algebra.hpp"
#include "shadowham/classifier.hpp"
#include "shadowham/integrators.hpp"

namespace shadowham {

/// A traceless logarithm Z of R on branch m; the continuous flow is
/// exp((t / tau) Z).
struct Generator {
    Mat2C z;
    long m = 0;
    double tau = 1.0;
    CaseTag case_tag = CaseTag::IA;

    /// Eigenvalues (x1, -x1) of Z, with x1 = log(y, m) on the distinct branch.
    std::pair<Complex, Complex> exponents() const { return eigenvalues2(z); }
};

/// H(q, p) = cA p^2 + cB q^2 + cC p q, additive constant fixed to zero.
struct ShadowHamiltonian {
    Complex cA, cB, cC;
    double tau = 1.0;
    long m = 0;
    CaseTag case_tag = CaseTag::IA;
    bool real_valued = false;
    /// lambda_m of the symplectic Euler closed form, when the source is Euler.
    std::optional<Complex> lambda;

    Complex operator()(Complex q, Complex p) const { return cA * p * p + cB * q * q + cC * p * q; }
    Complex dH_dq(Complex q, Complex p) const { return 2.0 * cB * q + cC * p; }
    Complex dH_dp(Complex q, Complex p) const { return 2.0 * cA * p + cC * q; }
};

inline constexpr double kRealTol = 1e-10;

/// (C1, C2, C3) with C1^2 + C2 C3 = 1, parameterising the R = +-I family
/// Z = x1 [[C1, C2], [C3, -C1]].
struct CaseIIParams {
    Complex c1{0.0}, c2{1.0}, c3{1.0};

    static CaseIIParams defaults() { return {0.0, 1.0, 1.0}; }
    static CaseIIParams real_rotation() { return {0.0, Complex{0.0, 1.0}, Complex{0.0, -1.0}}; }
    static CaseIIParams hyperbolic(Complex c3 = 0.0) { return {1.0, 0.0, c3}; }

    Complex constraint() const { return c1 * c1 + c2 * c3; }

    /// Rescales arbitrary (c1, c2, c3) onto the constraint surface. Throws
    /// ErrorCode::BadParams when c1^2 + c2 c3 == 0.
    static CaseIIParams project(Complex c1, Complex c2, Complex c3);
};

/// Distinct-eigenvalue branch (IA/IB/IC):
/// Z = log(y, m) / (y - 1/y) * (2R - (y + 1/y) I).
Generator generator_distinct(const TransitionMatrix& r, const EigenStructure& es, long m);

/// R = +-I: Z = x1 [[C1, C2], [C3, -C1]] with x1 = i pi (4m + 1 -+ 1) / 2.
/// With require_nontrivial, a zero exponent (R = I, m = 0) throws
/// ErrorCode::DegenerateBranch.
Generator generator_scalar(const TransitionMatrix& r, long m,
                           const CaseIIParams& params = CaseIIParams::defaults(),
                           bool require_nontrivial = false);

/// Evidence carried by a non-existence result.
struct NoHamiltonianReport {
    CaseTag case_tag = CaseTag::IIIB;
    EigenStructure eigen;
    std::string reason;
};

class NoHamiltonianError : public Error {
public:
    explicit NoHamiltonianError(NoHamiltonianReport report)
        : Error(ErrorCode::NoHamiltonian, report.reason), report_(std::move(report)) {}
    const NoHamiltonianReport& report() const noexcept { return report_; }

private:
    NoHamiltonianReport report_;
};

/// Defective eigenvalue +1: the unique generator Z = R - I (nilpotent).
/// Eigenvalue -1 throws NoHamiltonianError with the Jordan data attached.
Generator generator_jordan(const TransitionMatrix& r, double tol = kDefaultClassifyTol);

/// Dispatches on the classification. Throws NoHamiltonianError for IIIB.
Generator make_generator(const TransitionMatrix& r, const Classification& c, long m,
                         const CaseIIParams& params = CaseIIParams::defaults());

/// cA = Z2 / (2 tau), cB = -Z3 / (2 tau), cC = Z1 / tau.
/// Throws ErrorCode::NotTraceless if |tr Z| is beyond rounding.
ShadowHamiltonian hamiltonian_from_generator(const Generator& g);

/// Euler-family lambda_m:
///   0 < tau < 2: 2 m pi + acos(1 - tau^2 / 2)
///   tau > 2:     i (2m + 1) pi + log 2 - log(tau^2 - 2 + tau sqrt(tau^2 - 4))
/// Throws ErrorCode::CriticalTau at tau == 2 and ErrorCode::InvalidTau for tau <= 0.
Complex euler_lambda(double tau, long m);

/// Euler Hamiltonian straight from lambda_m:
///   H = lambda_m (p^2 + q^2 - tau p q) / (tau sqrt(|4 - tau^2|)).
ShadowHamiltonian euler_closed_hamiltonian(double tau, long m);

struct BranchSet {
    Classification classification;
    std::vector<Generator> generators;
    std::vector<ShadowHamiltonian> hamiltonians;
    std::optional<NoHamiltonianReport> no_hamiltonian;
};

/// One Hamiltonian per m in [m_min, m_max] for cases i and ii, the single
/// Hamiltonian for iii-a, and an empty list with a report for iii-b.
/// Results are ordered by m.
BranchSet enumerate_branches(const TransitionMatrix& r, long m_min, long m_max,
                             const std::optional<CaseIIParams>& params = std::nullopt,
                             double tol = kDefaultClassifyTol);

}  // namespace shadowham
