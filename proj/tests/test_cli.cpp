#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "shadowham/io.hpp"

namespace fs = std::filesystem;
using namespace shadowham;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::initializer_list<std::string> args) {
    std::vector<std::string> owned{"shadowham"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : owned) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("shadowham_cli_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("classify") {
    const Result r = run({"classify", "--integrator", "euler", "--tau", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("case: iii-b") != std::string::npos);
    CHECK(r.out.find("jordan:") != std::string::npos);

    const Result j = run({"classify", "--tau", "0.66", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["case"] == "i-a");
    CHECK(doc["eigen"]["theta"].get<double>() == doctest::Approx(std::acos(1 - 0.66 * 0.66 / 2)));

    CHECK(run({"classify", "--integrator", "double-euler", "--tau", "4"}).out.find("case: iii-a") !=
          std::string::npos);
}

TEST_CASE("hamiltonian") {
    const Result r = run({"hamiltonian", "--tau", "1", "--m-min", "-1", "--m-max", "1"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "m,case,cA_re,cA_im,cB_re,cB_im,cC_re,cC_im,lambda_re,lambda_im,real_valued");
    CHECK(rows[2].rfind("0,i-a,", 0) == 0);
    CHECK(rows[2].find("1.0471975511965979") != std::string::npos);

    const Result none = run({"hamiltonian", "--tau", "2", "--m-min", "-2", "--m-max", "2"});
    CHECK(none.code == 0);
    const auto none_rows = lines(none.out);
    REQUIRE(none_rows.size() == 2);
    CHECK(none_rows[1].rfind("# iii-b:", 0) == 0);

    const Result j = run({"hamiltonian", "--integrator", "custom", "--r", "1,0,0,1", "--m-min", "1",
                          "--m-max", "1", "--c1", "0", "--c2", "0:1", "--c3", "0:-1", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc["hamiltonians"].size() == 1);
    CHECK(doc["hamiltonians"][0]["real_valued"] == true);
    CHECK(doc["hamiltonians"][0]["case"] == "ii(+)");
}

TEST_CASE("validation errors exit with status 2") {
    CHECK(run({"classify", "--integrator", "custom", "--r", "1,0,0,2"}).code == 2);
    CHECK(run({"classify", "--integrator", "custom", "--r", "1,0,0"}).code == 2);
    CHECK(run({"classify", "--tau", "0"}).code == 2);
    CHECK(run({"classify", "--integrator", "leapfrog"}).code == 2);
    CHECK(run({"hamiltonian", "--m-min", "2", "--m-max", "1"}).code == 2);
    CHECK(run({"hamiltonian", "--integrator", "custom", "--r", "1,0,0,1", "--c1", "1", "--c2", "1",
               "--c3", "1"}).code == 2);
    CHECK(run({"hamiltonian", "--c1", "1"}).code == 2);
    CHECK(run({"sweep", "--grid", "3:1:0.1"}).code == 2);
    CHECK(run({"sweep", "--grid", "1:2"}).code == 2);
    CHECK(run({"sweep"}).code == 2);
    CHECK(run({"classify", "--format", "xml"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep") {
    const Result r = run({"sweep", "--grid", "0.5:5:0.5", "--m-min", "-1", "--m-max", "1"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "tau,case,trace,criticality,n_real");
    CHECK(rows[1].rfind("0.5,i-a,", 0) == 0);
    CHECK(rows[1].back() == '3');
    CHECK(rows[4].rfind("2,iii-b,", 0) == 0);
    CHECK(rows[4].back() == '0');
    CHECK(rows[6].rfind("3,i-c,", 0) == 0);

    const Result de = run({"sweep", "--integrator", "double-euler", "--grid", "4:5:1"});
    CHECK(de.out.find("4,iii-a,") != std::string::npos);
    CHECK(de.out.find("5,i-b,") != std::string::npos);
}

TEST_CASE("verify") {
    const Result ok = run({"verify"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find(" 0 failed") != std::string::npos);
    const Result bad = run({"verify", "--inject-fault", "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out)["passed"] == false);
    CHECK(run({"verify", "--seed", "5"}).out == run({"verify", "--seed", "5"}).out);
}

TEST_CASE("flow writes trajectories that round-trip") {
    TempDir dir;
    const std::string prefix = (dir.path / "orbit").string();
    const Result r = run({"flow", "--tau", "0.66", "--m-min", "-1", "--m-max", "1", "--out", prefix});
    REQUIRE(r.code == 0);
    for (const char* suffix : {"_discrete.csv", "_m-1.csv", "_m0.csv", "_m1.csv"}) {
        CHECK(fs::exists(prefix + suffix));
    }

    const ShadowHamiltonian h = enumerate_branches(euler(0.66), 1, 1).hamiltonians.front();
    std::ifstream in(prefix + "_m1.csv");
    const auto rows = io::read_trajectory_csv(in);
    REQUIRE(rows.size() == 301);
    CHECK(rows.back().t == doctest::Approx(6 * 0.66).epsilon(1e-15));
    for (const auto& row : rows) {
        CHECK(std::abs(h(row.q, row.p) - row.H) <= 1e-12 * std::max(1.0, std::abs(row.H)));
        CHECK(std::abs(row.H - rows.front().H) <= 1e-9 * std::abs(rows.front().H));
    }

    // Discrete orbit rows sit on the continuous samples every 50 rows.
    std::ifstream din(prefix + "_discrete.csv");
    const auto drows = io::read_trajectory_csv(din);
    REQUIRE(drows.size() == 7);
    for (std::size_t k = 0; k < drows.size(); ++k) {
        CHECK(std::abs(drows[k].q - rows[50 * k].q) <= 1e-8);
        CHECK(std::abs(drows[k].p - rows[50 * k].p) <= 1e-8);
    }

    // Deterministic output.
    const std::string first = slurp(prefix + "_m0.csv");
    REQUIRE(run({"flow", "--tau", "0.66", "--m-min", "-1", "--m-max", "1", "--out", prefix}).code == 0);
    CHECK(slurp(prefix + "_m0.csv") == first);
}

TEST_CASE("flow at a iii-b point writes only the discrete orbit") {
    TempDir dir;
    const std::string prefix = (dir.path / "crit").string();
    const Result r = run({"flow", "--tau", "2", "--out", prefix});
    CHECK(r.code == 0);
    CHECK(r.out.find("notice: case iii-b") != std::string::npos);
    CHECK(fs::exists(prefix + "_discrete.csv"));
    CHECK_FALSE(fs::exists(prefix + "_m0.csv"));
    std::ifstream in(prefix + "_discrete.csv");
    const auto rows = io::read_trajectory_csv(in);
    REQUIRE_FALSE(rows.empty());
    CHECK(std::isnan(rows[0].H.real()));
}

TEST_CASE("flow JSON output") {
    TempDir dir;
    const std::string prefix = (dir.path / "j").string();
    REQUIRE(run({"flow", "--tau", "3", "--format", "json", "--out", prefix, "--dt", "0.5"}).code == 0);
    const auto doc = nlohmann::json::parse(slurp(prefix + "_m0.json"));
    CHECK(doc.contains("states"));
}

TEST_CASE("read_trajectory_csv rejects malformed input") {
    std::istringstream bad_header("t,q\n1,2\n");
    CHECK_THROWS_AS(io::read_trajectory_csv(bad_header), std::runtime_error);
    std::istringstream bad_row(std::string(io::kTrajectoryHeader) + "\n1,2,3\n");
    CHECK_THROWS_AS(io::read_trajectory_csv(bad_row), std::runtime_error);
}
