#pragma once

#include <optional>
#include <string_view>

#include "shadowham/algebra.hpp"
#include "shadowham/integrators.hpp"

namespace shadowham {

/// Eigenstructure categories of a 2x2 symplectic matrix.
///   IA        distinct eigenvalues on the unit circle, all branches real
///   IB        distinct positive eigenvalues, only m = 0 real
///   IC        distinct negative eigenvalues, no real branch
///   IIPlus    R = +I, two-parameter family per branch
///   IIMinus   R = -I, two-parameter family per branch
///   IIIA      defective, eigenvalue +1: exactly one Hamiltonian
///   IIIB      defective, eigenvalue -1: no Hamiltonian
enum class CaseTag { IA, IB, IC, IIPlus, IIMinus, IIIA, IIIB };

/// "i-a", "i-b", "i-c", "ii(+)", "ii(-)", "iii-a", "iii-b".
std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_from_string(std::string_view label);

inline constexpr double kDefaultClassifyTol = 1e-9;

/// R = P J P^-1 with J = [[s, 1], [0, s]], s = +-1.
struct JordanData {
    Mat2C p;
    Mat2C j;
    double residual;  // max |P J P^-1 - R|
};

struct EigenStructure {
    Complex y;          // representative eigenvalue; the other one is 1/y
    double theta = 0;   // arg y in (-pi, pi]
    double modulus = 0;
    bool degenerate = false;
    double trace = 0;
    double criticality = 0;  // |T^2 - 4|
    std::optional<JordanData> jordan;
};

struct Classification {
    CaseTag tag;
    EigenStructure eigen;
};

/// Six-way classification by trace, with |T^2 - 4| <= tol treated as a
/// repeated eigenvalue and entrywise tol for the R = +-I test.
///
/// Representative eigenvalue: theta in (0, pi) for IA, y > 1 for IB and
/// -1 < y < 0 for IC. The IC choice makes branch m line up with the closed
/// form lambda_m = i(2m+1)pi + log 2 - log(tau^2 - 2 + tau sqrt(tau^2 - 4))
/// used for symplectic Euler.
///
/// Throws ErrorCode::Singular if |det R - 1| > 1e-6.
Classification classify(const TransitionMatrix& r, double tol = kDefaultClassifyTol);

/// Jordan similarity for a defective matrix (IIIA/IIIB).  P = [v w] with v the
/// unit eigenvector and (R - sI) w = v.  Throws ErrorCode::NotDefective when R
/// is within tol of +-I or has distinct eigenvalues.
EigenStructure jordan_decompose(const TransitionMatrix& r, double tol = kDefaultClassifyTol);

}  // namespace shadowham
