#include "shadowham/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shadowham::io {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json complex_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

Complex complex_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

json hamiltonian_json(const ShadowHamiltonian& h) {
    json j{{"case", std::string(to_string(h.case_tag))},
           {"m", h.m},
           {"tau", h.tau},
           {"cA", complex_json(h.cA)},
           {"cB", complex_json(h.cB)},
           {"cC", complex_json(h.cC)},
           {"real_valued", h.real_valued}};
    if (h.lambda) j["lambda"] = complex_json(*h.lambda);
    return j;
}

namespace {

json matrix_json(const Mat2C& m) {
    return json::array({json::array({complex_json(m.e11), complex_json(m.e12)}),
                        json::array({complex_json(m.e21), complex_json(m.e22)})});
}

json eigen_json(const EigenStructure& es) {
    json j{{"y", complex_json(es.y)},
           {"y_inv", complex_json(1.0 / es.y)},
           {"theta", es.theta},
           {"modulus", es.modulus},
           {"degenerate", es.degenerate},
           {"trace", es.trace},
           {"criticality", es.criticality}};
    if (es.jordan) {
        j["jordan"] = json{{"P", matrix_json(es.jordan->p)},
                           {"J", matrix_json(es.jordan->j)},
                           {"residual", es.jordan->residual}};
    }
    return j;
}

}  // namespace

json classification_json(const TransitionMatrix& r, const Classification& c) {
    return json{{"integrator", r.label()},
                {"tau", r.tau()},
                {"R", json::array({json::array({r.r1(), r.r2()}), json::array({r.r3(), r.r4()})})},
                {"case", std::string(to_string(c.tag))},
                {"eigen", eigen_json(c.eigen)}};
}

json no_hamiltonian_json(const NoHamiltonianReport& report) {
    return json{{"case", std::string(to_string(report.case_tag))},
                {"hamiltonian", nullptr},
                {"reason", report.reason},
                {"eigen", eigen_json(report.eigen)}};
}

json report_json(const VerificationReport& report) {
    json checks = json::array();
    for (const Check& c : report.checks) {
        checks.push_back(json{{"name", c.name},
                              {"residual", c.residual},
                              {"tolerance", c.tolerance},
                              {"passed", c.passed}});
    }
    return json{{"subject", report.subject},
                {"passed", report.passed()},
                {"failures", report.failures()},
                {"checks", checks}};
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const Check& c : report.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-70s %12.3e <= %9.1e\n", c.passed ? "ok" : "FAIL",
                      c.name.c_str(), c.residual, c.tolerance);
        out << line;
    }
    out << report.subject << ": " << report.checks.size() << " checks, " << report.failures()
        << " failed\n";
    return out.str();
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const ShadowHamiltonian* h) {
    out << kTrajectoryHeader << '\n';
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const PhaseState& s : traj.states) {
        const Complex hv = h ? (*h)(s.q, s.p) : Complex{nan, nan};
        out << g17(s.t) << ',' << g17(s.q.real()) << ',' << g17(s.q.imag()) << ','
            << g17(s.p.real()) << ',' << g17(s.p.imag()) << ',' << g17(hv.real()) << ','
            << g17(hv.imag()) << '\n';
    }
}

json trajectory_json(const Trajectory& traj, const ShadowHamiltonian* h) {
    json source{{"integrator", traj.source.integrator}, {"tau", traj.source.tau}};
    source["case"] = traj.source.case_tag ? json(std::string(to_string(*traj.source.case_tag)))
                                          : json(nullptr);
    source["m"] = traj.source.m ? json(*traj.source.m) : json(nullptr);
    json states = json::array();
    for (const PhaseState& s : traj.states) {
        json row{{"t", s.t}, {"q", complex_json(s.q)}, {"p", complex_json(s.p)}};
        row["H"] = h ? complex_json((*h)(s.q, s.p)) : json(nullptr);
        states.push_back(std::move(row));
    }
    json j{{"source", source}, {"states", states}};
    if (h) j["hamiltonian"] = hamiltonian_json(*h);
    return j;
}

std::vector<TrajectoryRow> read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kTrajectoryHeader) {
        throw std::runtime_error("unexpected trajectory header: " + line);
    }
    std::vector<TrajectoryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string cell;
        double v[7];
        for (double& x : v) {
            if (!std::getline(fields, cell, ',')) {
                throw std::runtime_error("short trajectory row: " + line);
            }
            x = std::strtod(cell.c_str(), nullptr);
        }
        rows.push_back({v[0], {v[1], v[2]}, {v[3], v[4]}, {v[5], v[6]}});
    }
    return rows;
}

}  // namespace shadowham::io
