#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadowham/classifier.hpp"
#include "shadowham/flow.hpp"
#include "shadowham/shadow.hpp"
#include "shadowham/verify.hpp"

namespace shadowham::io {

using json = nlohmann::ordered_json;

/// printf "%.17g".
std::string g17(double v);

json complex_json(Complex c);
Complex complex_from_json(const json& j);

/// {case, m, tau, cA, cB, cC, real_valued, lambda?}; complex values as {re, im}.
json hamiltonian_json(const ShadowHamiltonian& h);

json classification_json(const TransitionMatrix& r, const Classification& c);

json no_hamiltonian_json(const NoHamiltonianReport& report);

json report_json(const VerificationReport& report);
/// Fixed-width table, one line per check, followed by a summary line.
std::string report_text(const VerificationReport& report);

inline constexpr const char* kTrajectoryHeader = "t,q_re,q_im,p_re,p_im,H_re,H_im";

/// CSV with kTrajectoryHeader. H is evaluated with `h` at each state, or
/// written as nan when h is null.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const ShadowHamiltonian* h);

json trajectory_json(const Trajectory& traj, const ShadowHamiltonian* h);

struct TrajectoryRow {
    double t;
    Complex q, p, H;
};

/// Parses a file written by write_trajectory_csv. Throws std::runtime_error on a
/// malformed header or row.
std::vector<TrajectoryRow> read_trajectory_csv(std::istream& in);

}  // namespace shadowham::io
