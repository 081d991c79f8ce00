#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "loewner/energy.hpp"
#include "loewner/io.hpp"

using namespace loewner;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LOEWNER_CLI_PATH) + " " + args +
                            " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

}  // namespace

TEST_CASE("shortest round-trip double formatting") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    for (double v : {13.0 / 24.0, 1e-9, -2.0 / 3.0, 123456.789}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("csv and svg writers") {
    const fs::path dir = fs::temp_directory_path() / "loewner_io_test";
    fs::create_directories(dir);

    write_csv((dir / "t.csv").string(), "t,value", {{0.0, 1.0}, {0.5, -2.0}});
    CHECK(slurp(dir / "t.csv") == "t,value\n0,1\n0.5,-2\n");

    SvgPath path;
    path.points = {{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.5}};
    write_svg((dir / "t.svg").string(), {path});
    const std::string svg = slurp(dir / "t.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("energy report serialization") {
    EnergyReport rep;
    rep.value = 0.25;
    rep.method = EnergyMethod::quadrature;
    rep.n = 64;
    rep.error_estimate = 1e-12;
    const std::string json = rep.to_json();
    CHECK(json.find("\"value\": 0.25") != std::string::npos);
    CHECK(json.find("\"method\": \"quadrature\"") != std::string::npos);
    CHECK(json.find("\"n\": 64") != std::string::npos);
}

TEST_CASE("cli trace command is deterministic") {
    const fs::path a = fs::temp_directory_path() / "loewner_cli_a";
    const fs::path b = fs::temp_directory_path() / "loewner_cli_b";
    fs::remove_all(a);
    fs::remove_all(b);

    const std::string flags = "trace --family gamma0 --steps 800 --samples 60";
    REQUIRE(run_cli(flags + " --out " + a.string()) == 0);
    REQUIRE(run_cli(flags + " --out " + b.string()) == 0);

    CHECK(slurp(a / "gamma0_curve.csv") == slurp(b / "gamma0_curve.csv"));
    CHECK(slurp(a / "gamma0_curve.svg") == slurp(b / "gamma0_curve.svg"));
    CHECK(!slurp(a / "gamma0_curve.csv").empty());
    CHECK(slurp(a / "gamma0_curve.csv").substr(0, 7) == "t,re,im");

    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("cli trace families run") {
    const fs::path dir = fs::temp_directory_path() / "loewner_cli_fams";
    fs::remove_all(dir);
    const std::string out = " --out " + dir.string();
    CHECK(run_cli("trace --family wang --theta 1.0472 --steps 600" + out) == 0);
    CHECK(run_cli("trace --family emw --x0 -1 --y0 2 --steps 600" + out) == 0);
    CHECK(run_cli("trace --family sqrt --c 0 --steps 200" + out) == 0);
    CHECK(run_cli("trace --family arc --theta 0.8 --steps 400" + out) == 0);
    CHECK(fs::exists(dir / "wang_curve.csv"));
    CHECK(fs::exists(dir / "wang_driver.csv"));
    CHECK(fs::exists(dir / "emw_curve.svg"));
    CHECK(run_cli("trace --family universal --steps 300 --format json" + out) ==
          0);
    CHECK(fs::exists(dir / "universal_curve.json"));

    // sqrt with c=0 is the vertical segment
    std::ifstream csv(dir / "sqrt_curve.csv");
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        CHECK(std::abs(std::stod(line.substr(first + 1, second - first - 1))) <
              1e-12);
    }
    fs::remove_all(dir);

    CHECK(run_cli("trace --family nosuch") != 0);
}

TEST_CASE("cli verify subsets and report") {
    const fs::path report = fs::temp_directory_path() / "loewner_verify.json";
    fs::remove(report);
    REQUIRE(run_cli("verify --only distinct --out " + report.string()) == 0);
    const std::string json = slurp(report);
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("distinct_driver_gap") != std::string::npos);
    CHECK(json.find("\"all_pass\": true") != std::string::npos);
    // the tolerance scale is recorded
    REQUIRE(run_cli("verify --only distinct --tol 2 --out " + report.string()) ==
            0);
    CHECK(slurp(report).find("\"tol_scale\": 2") != std::string::npos);

    // identical configs give byte-identical reports
    const fs::path again = fs::temp_directory_path() / "loewner_verify2.json";
    REQUIRE(run_cli("verify --only distinct --tol 2 --out " + again.string()) ==
            0);
    CHECK(slurp(report) == slurp(again));
    fs::remove(report);
    fs::remove(again);
}

TEST_CASE("cli compare emits sweeps deterministically") {
    const fs::path a = fs::temp_directory_path() / "loewner_cmp_a";
    const fs::path b = fs::temp_directory_path() / "loewner_cmp_b";
    fs::remove_all(a);
    fs::remove_all(b);
    const std::string flags = "compare --deltas 1e-3,1e-4";
    REQUIRE(run_cli(flags + " --out " + a.string()) == 0);
    REQUIRE(run_cli(flags + " --out " + b.string()) == 0);
    for (const char* name :
         {"local98_curve.csv", "local98_weld.csv", "arc_ratios.csv",
          "asymptotic_welding.csv", "asymptotic_tip.csv", "same_weld_wang.csv",
          "same_weld_emw.csv"}) {
        CAPTURE(name);
        CHECK(fs::exists(a / name));
        CHECK(slurp(a / name) == slurp(b / name));
    }
    CHECK(fs::exists(a / "same_weld.svg"));
    CHECK(slurp(a / "local98_curve.csv").substr(0, 19) == "param,num,den,ratio");

    // an empty delta grid is rejected
    CHECK(run_cli("compare --deltas , --out " + a.string()) != 0);
    fs::remove_all(a);
    fs::remove_all(b);
}
