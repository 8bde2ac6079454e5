#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <tuple>
#include <vector>

#include "shadowham/classifier.hpp"
#include "shadowham/flow.hpp"
#include "shadowham/integrators.hpp"
#include "shadowham/io.hpp"
#include "shadowham/shadow.hpp"
#include "shadowham/verify.hpp"

namespace py = pybind11;
using namespace shadowham;

namespace {

using Rows = std::array<std::array<Complex, 2>, 2>;

Rows rows(const Mat2C& m) { return {{{m.e11, m.e12}, {m.e21, m.e22}}}; }

std::vector<std::tuple<double, Complex, Complex>> states(const Trajectory& traj) {
    std::vector<std::tuple<double, Complex, Complex>> out;
    out.reserve(traj.states.size());
    for (const auto& s : traj.states) out.emplace_back(s.t, s.q, s.p);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Shadow Hamiltonians of linear symplectic integrators for the harmonic oscillator.";

    static py::exception<Error> base_error(m, "ShadowhamError", PyExc_ValueError);
    static py::exception<NoHamiltonianError> no_ham_error(m, "NoHamiltonianError", base_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NoHamiltonianError& e) {
            no_ham_error(e.what());
        } catch (const Error& e) {
            base_error(e.what());
        }
    });

    py::enum_<CaseTag>(m, "CaseTag")
        .value("IA", CaseTag::IA)
        .value("IB", CaseTag::IB)
        .value("IC", CaseTag::IC)
        .value("II_PLUS", CaseTag::IIPlus)
        .value("II_MINUS", CaseTag::IIMinus)
        .value("IIIA", CaseTag::IIIA)
        .value("IIIB", CaseTag::IIIB)
        .def_property_readonly("label", [](CaseTag t) { return std::string(to_string(t)); });

    py::class_<TransitionMatrix>(m, "TransitionMatrix")
        .def_property_readonly("r1", &TransitionMatrix::r1)
        .def_property_readonly("r2", &TransitionMatrix::r2)
        .def_property_readonly("r3", &TransitionMatrix::r3)
        .def_property_readonly("r4", &TransitionMatrix::r4)
        .def_property_readonly("tau", &TransitionMatrix::tau)
        .def_property_readonly("label", &TransitionMatrix::label)
        .def_property_readonly("trace", &TransitionMatrix::trace)
        .def_property_readonly("det", &TransitionMatrix::det)
        .def("matrix", [](const TransitionMatrix& r) {
            return std::array<std::array<double, 2>, 2>{{{r.r1(), r.r2()}, {r.r3(), r.r4()}}};
        });

    m.def("euler", &euler, py::arg("tau"));
    m.def("velocity_verlet", &velocity_verlet, py::arg("tau"));
    m.def("position_verlet", &position_verlet, py::arg("tau"));
    m.def("double_euler", &double_euler, py::arg("tau"));
    m.def("vp", &vp, py::arg("tau"));
    m.def("compose", &compose, py::arg("a"), py::arg("b"));
    m.def("custom", &custom, py::arg("r1"), py::arg("r2"), py::arg("r3"), py::arg("r4"),
          py::arg("tau"));
    m.def("make_integrator",
          [](const std::string& name, double tau, std::optional<std::array<double, 4>> r) {
              return make_integrator(name, tau, r);
          },
          py::arg("name"), py::arg("tau"), py::arg("r") = py::none());

    py::class_<EigenStructure>(m, "EigenStructure")
        .def_readonly("y", &EigenStructure::y)
        .def_readonly("theta", &EigenStructure::theta)
        .def_readonly("modulus", &EigenStructure::modulus)
        .def_readonly("degenerate", &EigenStructure::degenerate)
        .def_readonly("trace", &EigenStructure::trace)
        .def_readonly("criticality", &EigenStructure::criticality)
        .def_property_readonly("jordan_p", [](const EigenStructure& es) -> std::optional<Rows> {
            if (!es.jordan) return std::nullopt;
            return rows(es.jordan->p);
        });

    py::class_<Classification>(m, "Classification")
        .def_readonly("tag", &Classification::tag)
        .def_readonly("eigen", &Classification::eigen)
        .def_property_readonly("label", [](const Classification& c) { return std::string(to_string(c.tag)); });

    m.def("classify", &classify, py::arg("r"), py::arg("tol") = kDefaultClassifyTol);

    py::class_<CaseIIParams>(m, "CaseIIParams")
        .def(py::init<Complex, Complex, Complex>(), py::arg("c1"), py::arg("c2"), py::arg("c3"))
        .def_readonly("c1", &CaseIIParams::c1)
        .def_readonly("c2", &CaseIIParams::c2)
        .def_readonly("c3", &CaseIIParams::c3)
        .def_static("defaults", &CaseIIParams::defaults)
        .def_static("real_rotation", &CaseIIParams::real_rotation)
        .def_static("project", &CaseIIParams::project);

    py::class_<Generator>(m, "Generator")
        .def_readonly("m", &Generator::m)
        .def_readonly("tau", &Generator::tau)
        .def_readonly("case_tag", &Generator::case_tag)
        .def_property_readonly("z", [](const Generator& g) { return rows(g.z); })
        .def("exponents", &Generator::exponents);

    py::class_<ShadowHamiltonian>(m, "ShadowHamiltonian")
        .def_readonly("cA", &ShadowHamiltonian::cA)
        .def_readonly("cB", &ShadowHamiltonian::cB)
        .def_readonly("cC", &ShadowHamiltonian::cC)
        .def_readonly("tau", &ShadowHamiltonian::tau)
        .def_readonly("m", &ShadowHamiltonian::m)
        .def_readonly("case_tag", &ShadowHamiltonian::case_tag)
        .def_readonly("real_valued", &ShadowHamiltonian::real_valued)
        .def_readonly("lambda_", &ShadowHamiltonian::lambda)
        .def("__call__", &ShadowHamiltonian::operator(), py::arg("q"), py::arg("p"))
        .def("to_json", [](const ShadowHamiltonian& h) { return io::hamiltonian_json(h).dump(); });

    py::class_<BranchSet>(m, "BranchSet")
        .def_readonly("classification", &BranchSet::classification)
        .def_readonly("generators", &BranchSet::generators)
        .def_readonly("hamiltonians", &BranchSet::hamiltonians)
        .def_property_readonly("no_hamiltonian", [](const BranchSet& b) {
            return b.no_hamiltonian.has_value() ? std::optional<std::string>(b.no_hamiltonian->reason)
                                                : std::nullopt;
        });

    m.def("generator_distinct", &generator_distinct, py::arg("r"), py::arg("eigen"), py::arg("m"));
    m.def("generator_scalar", &generator_scalar, py::arg("r"), py::arg("m"),
          py::arg("params") = CaseIIParams::defaults(), py::arg("require_nontrivial") = false);
    m.def("generator_jordan", &generator_jordan, py::arg("r"), py::arg("tol") = kDefaultClassifyTol);
    m.def("hamiltonian_from_generator", &hamiltonian_from_generator, py::arg("g"));
    m.def("euler_lambda", &euler_lambda, py::arg("tau"), py::arg("m"));
    m.def("euler_closed_hamiltonian", &euler_closed_hamiltonian, py::arg("tau"), py::arg("m"));
    m.def("enumerate_branches", &enumerate_branches, py::arg("r"), py::arg("m_min"),
          py::arg("m_max"), py::arg("params") = py::none(), py::arg("tol") = kDefaultClassifyTol);

    m.def("discrete_orbit",
          [](const TransitionMatrix& r, double q0, double p0, std::size_t n) {
              return states(discrete_orbit(r, q0, p0, n));
          },
          py::arg("r"), py::arg("q0"), py::arg("p0"), py::arg("n"));
    m.def("continuous_state",
          [](const Generator& g, double q0, double p0, double t) {
              const PhaseState s = continuous_state(g, q0, p0, t);
              return std::make_tuple(s.t, s.q, s.p);
          },
          py::arg("g"), py::arg("q0"), py::arg("p0"), py::arg("t"));
    m.def("euler_closed_form",
          [](double tau, long mm, double q0, double p0, double t) {
              const PhaseState s = euler_closed_form(tau, mm, q0, p0, t);
              return std::make_tuple(s.t, s.q, s.p);
          },
          py::arg("tau"), py::arg("m"), py::arg("q0"), py::arg("p0"), py::arg("t"));
    m.def("sample_trajectory",
          [](const Generator& g, double q0, double p0, double t_end, double dt) {
              return states(sample_trajectory(g, q0, p0, t_end, dt));
          },
          py::arg("g"), py::arg("q0"), py::arg("p0"), py::arg("t_end"), py::arg("dt"));
    m.def("rotation_sense",
          [](const ShadowHamiltonian& h) { return std::string(to_string(rotation_sense(h))); },
          py::arg("h"));

    m.def("run_suite",
          [](std::uint64_t seed, bool inject_fault) {
              return io::report_json(run_suite({seed, inject_fault})).dump();
          },
          py::arg("seed") = kDefaultSeed, py::arg("inject_fault") = false,
          "Runs the verification suite and returns the report as a JSON string.");
}
