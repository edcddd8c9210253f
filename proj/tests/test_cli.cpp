// End-to-end checks of the command-line tool: exit-code taxonomy, file
// outputs, and the generate -> export -> classify round trip.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <json.hpp>

#include "monostatic/mesh_io.hpp"

#ifndef CLI_BINARY_PATH
#error "CLI_BINARY_PATH must be defined"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path log = fs::temp_directory_path() / ("monostatic_cli_" + std::to_string(::getpid()) +
                                                "_" + std::to_string(counter++) + ".log");
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " > " + log.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult res;
#ifdef _WIN32
    res.exit_code = status;
#else
    res.exit_code = WEXITSTATUS(status);
#endif
    std::ifstream is(log);
    std::stringstream ss;
    ss << is.rdbuf();
    res.output = ss.str();
    fs::remove(log);
    return res;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("monostatic_cli_scratch_" +
                                                std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("generate from the embedded row 3 writes a 21-vertex mesh") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "row3.json";
    fs::path obj = dir / "row3.obj";
    RunResult r = run("generate --table1-row 3 --json " + mesh.string() + " --obj " + obj.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("v=21") != std::string::npos);

    json j = json::parse(std::ifstream(mesh));
    CHECK(j["vertices"].size() == 21);
    CHECK(j["faces"].size() == 21);

    std::ifstream is(obj);
    std::string line;
    int vcount = 0;
    while (std::getline(is, line))
        if (line.rfind("v ", 0) == 0) ++vcount;
    CHECK(vcount == 21);
}

TEST_CASE("generate from explicit row 2 angles") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "row2.json";
    RunResult r = run("generate --n 3 --k 8 --alphas 30.273,30.273,46.543,72.912 --json " +
                      mesh.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("v=25") != std::string::npos);
}

TEST_CASE("generate rejects out-of-bound angles with exit 2") {
    RunResult r = run("generate --n 1 --k 2 --alphas 90,90");
    CHECK(r.exit_code == 2);
}

TEST_CASE("classify the generated row 3 mesh: mono-monostatic, complexity 80") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "p45.json";
    fs::path report = dir / "p45_report.json";
    REQUIRE(run("generate --table1-row 3 --json " + mesh.string()).exit_code == 0);
    RunResult r = run("classify --input " + mesh.string() + " --mass vertex --report " +
                      report.string());
    CHECK(r.exit_code == 0);
    json j = json::parse(std::ifstream(report));
    CHECK(j["S"] == 1);
    CHECK(j["H"] == 0);
    CHECK(j["U"] == 1);
    CHECK(j["complexity"] == 80);
}

TEST_CASE("classify with the oracle flag prints agreement") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "orc.json";
    REQUIRE(run("generate --table1-row 3 --json " + mesh.string()).exit_code == 0);
    RunResult r = run("classify --input " + mesh.string() + " --mass vertex --oracle 20000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("oracle: S=1 U=1 agreement=yes") != std::string::npos);
}

TEST_CASE("classify a cube point cloud under the solid model") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "cube.json";
    json j;
    j["vertices"] = json::array();
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) j["vertices"].push_back({x, y, z});
    std::ofstream(mesh) << j.dump();
    RunResult r = run("classify --input " + mesh.string() + " --mass solid");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("S=6 H=12 U=8") != std::string::npos);
    CHECK(r.output.find("complexity=0") != std::string::npos);
}

TEST_CASE("classify rejects a dented (non-convex) mesh with exit 4") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "dent.json";
    json j;
    j["vertices"] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                     {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0.2, 0.2, 0.2}};
    j["faces"] = {{0, 3, 2, 1}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}, {4, 5, 6, 7}};
    std::ofstream(mesh) << j.dump();
    RunResult r = run("classify --input " + mesh.string() + " --mass vertex");
    CHECK(r.exit_code == 4);
}

TEST_CASE("optimize exit codes") {
    CHECK(run("optimize --n 0 --k 5").exit_code == 2);
    // n=1 has no feasible angle vector at all (alpha2 = pi - alpha1 > pi/2).
    CHECK(run("optimize --n 1 --k 5 --starts 4").exit_code == 6);
    fs::path dir = scratch_dir();
    fs::path out = dir / "opt45.json";
    RunResult r = run("optimize --n 4 --k 5 --starts 8 --seed 1 --json " + out.string());
    CHECK(r.exit_code == 0);
    json j = json::parse(std::ifstream(out));
    CHECK(j["status"] == "converged");
    CHECK(j["v"] == 21);
    CHECK(std::abs(j["z_C"].get<double>() - (-0.015354)) < 1e-4);
    CHECK(j["report"]["S"] == 1);
}

TEST_CASE("verify reports the published-data defects and exits 1") {
    RunResult r = run("verify");
    CHECK(r.exit_code == 1);
    // Rows 1-4 and 6 verify; row 5 and the (3,1) block are genuine defects in
    // the published data.
    CHECK(r.output.find("[PASS] table1 row 3 mono-monostatic") != std::string::npos);
    CHECK(r.output.find("[FAIL] table1 row 5 mono-monostatic") != std::string::npos);
    CHECK(r.output.find("[FAIL] table2 block (3,1)") != std::string::npos);
    CHECK(r.output.find("[PASS] table2 block (2,1)") != std::string::npos);
    // All six z_C rows reproduce from the angles.
    for (int row = 1; row <= 6; ++row)
        CHECK(r.output.find("[PASS] table1 row " + std::to_string(row) + " z_C") !=
              std::string::npos);
}

TEST_CASE("verify negative control: a tampered angle is detected") {
    // A one-degree tamper breaks the pole-to-pole closure, which the build
    // stage rejects; the z_C value alone is second-order flat at the optimum.
    RunResult r = run("verify --perturb-row3-deg 1.0");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("[FAIL] table1 row 3 build") != std::string::npos);

    // A symmetric tamper keeps the sum at 180 but moves the angles off the
    // published row; the rebuilt body is no longer the published one.
    RunResult r2 = run("verify --perturb-row3-deg 7.0");
    CHECK(r2.exit_code == 1);
}

TEST_CASE("JSON and OBJ exports classify identically") {
    fs::path dir = scratch_dir();
    fs::path meshj = dir / "rt.json";
    fs::path mesho = dir / "rt.obj";
    fs::path repj = dir / "rt_j.json";
    fs::path repo = dir / "rt_o.json";
    REQUIRE(run("generate --table1-row 4 --json " + meshj.string() + " --obj " + mesho.string())
                .exit_code == 0);
    REQUIRE(run("classify --input " + meshj.string() + " --mass vertex --report " + repj.string())
                .exit_code == 0);
    REQUIRE(run("classify --input " + mesho.string() + " --mass vertex --report " + repo.string())
                .exit_code == 0);
    json a = json::parse(std::ifstream(repj));
    json b = json::parse(std::ifstream(repo));
    CHECK(a["S"] == b["S"]);
    CHECK(a["H"] == b["H"]);
    CHECK(a["U"] == b["U"]);
    CHECK(a["unstable"] == b["unstable"]);
    for (int c = 0; c < 3; ++c)
        CHECK(std::abs(a["stable"][0]["foot"][c].get<double>() -
                       b["stable"][0]["foot"][c].get<double>()) < 1e-9);
}

TEST_CASE("planar row 6 exports a polygon that classifies (1,1)") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "gon11.json";
    RunResult g = run("generate --table1-row 6 --json " + mesh.string());
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("v=11") != std::string::npos);
    RunResult c = run("classify --input " + mesh.string() + " --mass vertex");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("S=1 U=1") != std::string::npos);
}

TEST_CASE("scan reproduces the published minimal-k rows at full scale") {
    fs::path dir = scratch_dir();
    fs::path csv = dir / "scan.csv";
    RunResult r = run("scan --n-max 5 --k-max 25 --starts 8 --seed 1 --csv " + csv.string());
    CHECK(r.exit_code == 0);
    std::stringstream ss;
    ss << std::ifstream(csv).rdbuf();
    std::string text = ss.str();
    CHECK(text.find("2,25,51,-5.12766e-04") != std::string::npos);
    CHECK(text.find("3,8,25,-6.14134e-03") != std::string::npos);
    CHECK(text.find("4,5,21,-1.53540e-02") != std::string::npos);
    CHECK(text.find("5,2*,11,-1.79839e-02") != std::string::npos);
    CHECK(text.find("5,4,21,-2.99718e-02") != std::string::npos);
}

TEST_CASE("environment tolerance override is accepted") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "tol.json";
    REQUIRE(run("generate --table1-row 3 --json " + mesh.string()).exit_code == 0);
    std::string cmd = "MONOSTATIC_TOLERANCE=1e-7 " + std::string(CLI_BINARY_PATH) +
                      " classify --input " + mesh.string() + " --mass vertex > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("marginal equilibria produce exit 5 and the report is still written") {
    fs::path dir = scratch_dir();
    fs::path mesh = dir / "marg.json";
    fs::path report = dir / "marg_report.json";
    REQUIRE(run("generate --table1-row 3 --json " + mesh.string()).exit_code == 0);
    // A deliberately loose band pushes near-critical features into the
    // marginal list.
    std::string cmd = "MONOSTATIC_TOLERANCE=0.02 " + std::string(CLI_BINARY_PATH) +
                      " classify --input " + mesh.string() + " --mass vertex --report " +
                      report.string() + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 5);
    json j = json::parse(std::ifstream(report));
    CHECK(j["marginal"].size() > 0);
}
