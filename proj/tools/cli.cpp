#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadowham/classifier.hpp"
#include "shadowham/flow.hpp"
#include "shadowham/integrators.hpp"
#include "shadowham/io.hpp"
#include "shadowham/shadow.hpp"
#include "shadowham/verify.hpp"

namespace shadowham::cli {

namespace {

using io::g17;
using io::json;

enum class Format { Csv, Json };

struct RunConfig {
    std::string integrator = "euler";
    double tau = 1.0;
    std::string r_entries;
    long m_min = 0;
    long m_max = 0;
    double q0 = 1.0;
    double p0 = 0.0;
    std::optional<double> t_end;
    std::optional<double> dt;
    std::string c1, c2, c3;
    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
    Format format = Format::Csv;
    std::string grid;
    bool inject_fault = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0.0};
        }
        const std::string re_text = text.substr(0, colon), im_text = text.substr(colon + 1);
        const double re = std::stod(re_text, &used);
        if (used != re_text.size()) throw std::invalid_argument(text);
        const double im = std::stod(im_text, &used);
        if (used != im_text.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse complex value '" + text + "' (expected re or re:im)");
    }
}

std::vector<double> parse_list(const std::string& text, char sep) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, sep)) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::logic_error&) {
            throw UsageError("cannot parse number '" + cell + "' in '" + text + "'");
        }
    }
    return values;
}

void validate(const RunConfig& cfg) {
    if (cfg.m_min > cfg.m_max) throw UsageError("--m-min must not exceed --m-max");
    if (cfg.dt && !(*cfg.dt > 0.0)) throw UsageError("--dt must be positive");
    if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw UsageError("--t-end must be non-negative");
}

TransitionMatrix build(const RunConfig& cfg, double tau) {
    std::optional<std::array<double, 4>> entries;
    if (cfg.integrator == "custom") {
        const auto r = parse_list(cfg.r_entries, ',');
        if (r.size() != 4) throw UsageError("--r needs four comma-separated entries r1,r2,r3,r4");
        entries = std::array<double, 4>{r[0], r[1], r[2], r[3]};
    }
    return make_integrator(cfg.integrator, tau, entries);
}

std::optional<CaseIIParams> case2_params(const RunConfig& cfg) {
    const bool any = !cfg.c1.empty() || !cfg.c2.empty() || !cfg.c3.empty();
    if (!any) return std::nullopt;
    if (cfg.c1.empty() || cfg.c2.empty() || cfg.c3.empty()) {
        throw UsageError("--c1, --c2 and --c3 must be given together");
    }
    CaseIIParams params{parse_complex(cfg.c1), parse_complex(cfg.c2), parse_complex(cfg.c3)};
    if (std::abs(params.constraint() - 1.0) > 1e-10) {
        throw Error(ErrorCode::BadParams, "c1^2 + c2 c3 must equal 1");
    }
    return params;
}

/// Writes to --out when given, otherwise to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + cfg.out_path);
    file << text;
}

std::string eigen_line(const EigenStructure& es) {
    const Complex inv = 1.0 / es.y;
    std::ostringstream s;
    s << "eigenvalues: y = " << g17(es.y.real()) << (es.y.imag() < 0 ? " - " : " + ")
      << g17(std::abs(es.y.imag())) << "i, 1/y = " << g17(inv.real())
      << (inv.imag() < 0 ? " - " : " + ") << g17(std::abs(inv.imag())) << "i\n";
    return s.str();
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const TransitionMatrix r = build(cfg, cfg.tau);
    const Classification c = classify(r);
    if (cfg.format == Format::Json) {
        emit(cfg, out, io::classification_json(r, c).dump(2) + "\n");
        return 0;
    }
    std::ostringstream s;
    s << "case: " << to_string(c.tag) << '\n';
    s << "integrator: " << r.label() << " tau = " << g17(r.tau()) << '\n';
    s << "R: [[" << g17(r.r1()) << ", " << g17(r.r2()) << "], [" << g17(r.r3()) << ", "
      << g17(r.r4()) << "]]\n";
    s << "trace: " << g17(c.eigen.trace) << '\n';
    s << "criticality |T^2-4|: " << g17(c.eigen.criticality) << '\n';
    s << eigen_line(c.eigen);
    s << "theta: " << g17(c.eigen.theta) << " modulus: " << g17(c.eigen.modulus) << '\n';
    if (c.eigen.jordan) {
        const auto& jd = *c.eigen.jordan;
        s << "jordan: J = [[" << g17(jd.j.e11.real()) << ", 1], [0, " << g17(jd.j.e22.real())
          << "]], P = [[" << g17(jd.p.e11.real()) << ", " << g17(jd.p.e12.real()) << "], ["
          << g17(jd.p.e21.real()) << ", " << g17(jd.p.e22.real()) << "]], residual "
          << g17(jd.residual) << '\n';
    }
    if (c.tag == CaseTag::IIIB) s << "hamiltonian: none (defective eigenvalue -1)\n";
    emit(cfg, out, s.str());
    return 0;
}

int cmd_hamiltonian(const RunConfig& cfg, std::ostream& out) {
    const TransitionMatrix r = build(cfg, cfg.tau);
    const BranchSet set = enumerate_branches(r, cfg.m_min, cfg.m_max, case2_params(cfg));
    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (const auto& h : set.hamiltonians) rows.push_back(io::hamiltonian_json(h));
        json doc{{"classification", io::classification_json(r, set.classification)},
                 {"hamiltonians", rows}};
        if (set.no_hamiltonian) doc["no_hamiltonian"] = io::no_hamiltonian_json(*set.no_hamiltonian);
        emit(cfg, out, doc.dump(2) + "\n");
        return 0;
    }
    std::ostringstream s;
    s << "m,case,cA_re,cA_im,cB_re,cB_im,cC_re,cC_im,lambda_re,lambda_im,real_valued\n";
    for (const auto& h : set.hamiltonians) {
        s << h.m << ',' << to_string(h.case_tag) << ',' << g17(h.cA.real()) << ','
          << g17(h.cA.imag()) << ',' << g17(h.cB.real()) << ',' << g17(h.cB.imag()) << ','
          << g17(h.cC.real()) << ',' << g17(h.cC.imag()) << ',';
        if (h.lambda) s << g17(h.lambda->real()) << ',' << g17(h.lambda->imag());
        else s << ',';
        s << ',' << (h.real_valued ? "true" : "false") << '\n';
    }
    if (set.no_hamiltonian) {
        s << "# " << to_string(set.no_hamiltonian->case_tag) << ": " << set.no_hamiltonian->reason
          << '\n';
    }
    emit(cfg, out, s.str());
    return 0;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + path);
    file << text;
}

std::string render(const RunConfig& cfg, const Trajectory& traj, const ShadowHamiltonian* h) {
    if (cfg.format == Format::Json) return io::trajectory_json(traj, h).dump(2) + "\n";
    std::ostringstream s;
    io::write_trajectory_csv(s, traj, h);
    return s.str();
}

int cmd_flow(const RunConfig& cfg, std::ostream& out) {
    const TransitionMatrix r = build(cfg, cfg.tau);
    const double t_end = cfg.t_end.value_or(6.0 * r.tau());
    const double dt = cfg.dt.value_or(r.tau() / 50.0);
    const std::string prefix = cfg.out_path.empty() ? "trajectory" : cfg.out_path;
    const std::string ext = cfg.format == Format::Json ? ".json" : ".csv";

    const BranchSet set = enumerate_branches(r, cfg.m_min, cfg.m_max, case2_params(cfg));
    const auto steps = static_cast<std::size_t>(std::floor(t_end / r.tau() + 1e-9));
    Trajectory discrete = discrete_orbit(r, cfg.q0, cfg.p0, steps);
    discrete.source.case_tag = set.classification.tag;

    const ShadowHamiltonian* first = set.hamiltonians.empty() ? nullptr : &set.hamiltonians.front();
    const std::string discrete_path = prefix + "_discrete" + ext;
    write_file(discrete_path, render(cfg, discrete, first));
    out << "wrote " << discrete_path << '\n';

    if (set.no_hamiltonian) {
        out << "notice: case " << to_string(set.no_hamiltonian->case_tag)
            << ", no Hamiltonian exists; only the discrete orbit was written\n";
        return 0;
    }
    for (std::size_t i = 0; i < set.generators.size(); ++i) {
        const Generator& g = set.generators[i];
        Trajectory traj = sample_trajectory(g, cfg.q0, cfg.p0, t_end, dt);
        traj.source.integrator = r.label();
        const std::string path = prefix + "_m" + std::to_string(g.m) + ext;
        write_file(path, render(cfg, traj, &set.hamiltonians[i]));
        out << "wrote " << path << '\n';
    }
    return 0;
}

std::vector<double> parse_grid(const std::string& text) {
    const auto parts = parse_list(text, ':');
    if (parts.size() != 3) throw UsageError("--grid expects start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0) || !(start > 0.0) || start > stop) {
        throw UsageError("--grid '" + text + "' is empty or invalid (need 0 < start <= stop, step > 0)");
    }
    std::vector<double> grid;
    for (std::size_t k = 0;; ++k) {
        const double tau = start + static_cast<double>(k) * step;
        if (tau > stop + 1e-9 * step) break;
        grid.push_back(tau);
    }
    return grid;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.grid.empty()) throw UsageError("sweep needs --grid start:stop:step");
    const std::vector<double> grid = parse_grid(cfg.grid);
    const auto params = case2_params(cfg);

    std::ostringstream csv;
    json rows = json::array();
    csv << "tau,case,trace,criticality,n_real\n";
    for (double tau : grid) {
        const TransitionMatrix r = build(cfg, tau);
        const BranchSet set = enumerate_branches(r, cfg.m_min, cfg.m_max, params);
        const auto n_real = std::count_if(set.hamiltonians.begin(), set.hamiltonians.end(),
                                          [](const ShadowHamiltonian& h) { return h.real_valued; });
        const auto& c = set.classification;
        csv << g17(tau) << ',' << to_string(c.tag) << ',' << g17(c.eigen.trace) << ','
            << g17(c.eigen.criticality) << ',' << n_real << '\n';
        rows.push_back(json{{"tau", tau},
                            {"case", std::string(to_string(c.tag))},
                            {"trace", c.eigen.trace},
                            {"criticality", c.eigen.criticality},
                            {"n_real", n_real}});
    }
    emit(cfg, out, cfg.format == Format::Json ? rows.dump(2) + "\n" : csv.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const VerificationReport report = run_suite({cfg.seed, cfg.inject_fault});
    emit(cfg, out, cfg.format == Format::Json ? io::report_json(report).dump(2) + "\n"
                                              : io::report_text(report));
    return report.passed() ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--integrator", cfg.integrator,
                    "euler, velocity-verlet, position-verlet, double-euler, vp or custom")
        ->capture_default_str();
    sub->add_option("--r", cfg.r_entries, "custom matrix entries r1,r2,r3,r4");
    sub->add_option("--m-min", cfg.m_min, "lowest logarithm branch")->capture_default_str();
    sub->add_option("--m-max", cfg.m_max, "highest logarithm branch")->capture_default_str();
    sub->add_option("--c1", cfg.c1, "case ii parameter C1 (re or re:im)");
    sub->add_option("--c2", cfg.c2, "case ii parameter C2 (re or re:im)");
    sub->add_option("--c3", cfg.c3, "case ii parameter C3 (re or re:im)");
    sub->add_option("--out", cfg.out_path, "output file (flow: file prefix)");
    sub->add_option("--format", cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Shadow Hamiltonians of linear symplectic integrators"};
    app.name("shadowham");
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "classify the transition matrix");
    auto* ham_cmd = app.add_subcommand("hamiltonian", "list shadow Hamiltonians per branch");
    auto* flow_cmd = app.add_subcommand("flow", "write continuous and discrete trajectories");
    auto* sweep_cmd = app.add_subcommand("sweep", "classify over a tau grid");
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");

    for (auto* sub : {classify_cmd, ham_cmd, flow_cmd, sweep_cmd}) add_common(sub, cfg);
    for (auto* sub : {classify_cmd, ham_cmd, flow_cmd}) {
        sub->add_option("--tau", cfg.tau, "time-increment")->capture_default_str();
    }
    for (auto* sub : {flow_cmd}) {
        sub->add_option("--q0", cfg.q0, "initial coordinate")->capture_default_str();
        sub->add_option("--p0", cfg.p0, "initial momentum")->capture_default_str();
        sub->add_option("--t-end", cfg.t_end, "final time (default 6 tau)");
        sub->add_option("--dt", cfg.dt, "sample spacing (default tau/50)");
    }
    sweep_cmd->add_option("--grid", cfg.grid, "tau grid start:stop:step")->required();
    verify_cmd->add_option("--seed", cfg.seed, "seed for random initial states")->capture_default_str();
    verify_cmd->add_option("--out", cfg.out_path, "report file");
    verify_cmd->add_option("--format", cfg.format, "csv (plain text table) or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
    verify_cmd->add_flag("--inject-fault", cfg.inject_fault, "perturb every generator (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        validate(cfg);
        if (*classify_cmd) return cmd_classify(cfg, out);
        if (*ham_cmd) return cmd_hamiltonian(cfg, out);
        if (*flow_cmd) return cmd_flow(cfg, out);
        if (*sweep_cmd) return cmd_sweep(cfg, out);
        if (*verify_cmd) return cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace shadowham::cli
