#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sqm/app.hpp"
#include "sqm/config.hpp"
#include "sqm/errors.hpp"

using namespace sqm;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("sqm_app_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(const std::string& cmd, RunConfig cfg, const fs::path& dir, std::string* err_out = nullptr) {
    cfg.out_dir = dir.string();
    std::ostringstream out, err;
    const int code = run_command(cmd, cfg, out, err);
    if (err_out) *err_out = err.str();
    return code;
}

}  // namespace

TEST_CASE("spectrum with defaults") {
    const auto dir = fresh_dir("spectrum");
    CHECK(run("spectrum", parse_config(""), dir) == 0);
    const auto report = slurp(dir / "report.txt");
    CHECK(report.find("3.1006") != std::string::npos);
    const auto csv = slurp(dir / "spectrum.csv");
    CHECK(csv.rfind("source,mass_gev,rel_err_pct\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("wigner slices per p1 value with decreasing peaks") {
    const auto dir = fresh_dir("wigner");
    CHECK(run("wigner", parse_config("b_z=0\np1_values=2.3,2.5,2.9\n"), dir) == 0);
    double last = 1e9;
    for (const char* name : {"wigner_p1_2.3.csv", "wigner_p1_2.5.csv", "wigner_p1_2.9.csv"}) {
        std::istringstream in(slurp(dir / name));
        std::string line;
        std::getline(in, line);
        CHECK(line == "q1,p1,q2,p2,f_w");
        double peak = -1e9;
        int rows = 0;
        while (std::getline(in, line)) {
            peak = std::max(peak, std::stod(line.substr(line.rfind(',') + 1)));
            ++rows;
        }
        CHECK(rows == 81);
        CHECK(peak < last);
        last = peak;
    }
}

TEST_CASE("outputs are deterministic") {
    const auto a = fresh_dir("det_a");
    const auto b = fresh_dir("det_b");
    const auto cfg = parse_config("b_z=0.38\n");
    for (const char* cmd : {"spectrum", "wigner", "diagnose"}) {
        CHECK(run(cmd, cfg, a) == 0);
        CHECK(run(cmd, cfg, b) == 0);
    }
    for (const auto& entry : fs::directory_iterator(a)) CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
}

TEST_CASE("diagnose writes the appendix comparison and fixture report") {
    const auto dir = fresh_dir("diagnose");
    CHECK(run("diagnose", parse_config(""), dir) == 0);
    const auto diag = slurp(dir / "diagnostic.csv");
    CHECK(diag.rfind("m1,m2,n1,n2,oracle,appendix,abs_diff\n0,0,0,0,48,20,28\n", 0) == 0);
    CHECK(slurp(dir / "fixtures.csv").find("excited_10,1,2,89.3,") != std::string::npos);
}

TEST_CASE("verify on a pristine build") {
    const auto dir = fresh_dir("verify");
    CHECK(run("verify", parse_config(""), dir) == 0);
    CHECK(slurp(dir / "verify.txt").find("FAIL") == std::string::npos);
}

TEST_CASE("negativity at strong field") {
    const auto dir = fresh_dir("negativity");
    CHECK(run("negativity", parse_config("b_z=0.38\n"), dir) == 0);
    std::istringstream in(slurp(dir / "negativity.csv"));
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "min_value,negative_volume,q1,p1,q2,p2,captured_fraction,slice_min");
    CHECK(std::stod(row) < 0.0);
    CHECK(std::stod(row.substr(row.find(',') + 1)) > 0.0);
}

TEST_CASE("domain errors exit 3 and write nothing") {
    const auto dir = fresh_dir("domain");
    std::string err;
    CHECK(run("spectrum", parse_config("alpha=0.1\nbeta=0.0001\nb_z=3\n"), dir, &err) == 3);
    CHECK(err.rfind("ERROR NEGATIVE_DISCRIMINANT: ", 0) == 0);
    CHECK(std::count(err.begin(), err.end(), '\n') == 1);
    CHECK_FALSE(fs::exists(dir));

    CHECK(run("wigner", parse_config("n1=2\n"), dir, &err) == 3);
    CHECK(err.rfind("ERROR DEGENERATE_COUPLING: ", 0) == 0);
    CHECK_FALSE(fs::exists(dir));
}

TEST_CASE("unknown command and unwritable directory") {
    std::string err;
    CHECK(run("plot", parse_config(""), fresh_dir("unknown"), &err) == 2);
    CHECK(err.rfind("ERROR CONFIG_ERROR: ", 0) == 0);
    CHECK(run("spectrum", parse_config(""), "/proc/sqm_cannot_create", &err) == 2);
    CHECK(err.rfind("ERROR IO_ERROR: ", 0) == 0);
}

TEST_CASE("exit code mapping") {
    CHECK(exit_code_for(ErrorCode::ConfigError) == 2);
    CHECK(exit_code_for(ErrorCode::IoError) == 2);
    CHECK(exit_code_for(ErrorCode::NegativeDiscriminant) == 3);
    CHECK(exit_code_for(ErrorCode::DegenerateCoupling) == 3);
}
