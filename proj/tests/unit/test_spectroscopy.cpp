#include <cmath>
#include <sstream>

#include "doctest.h"
#include "sqm/errors.hpp"
#include "sqm/spectroscopy.hpp"

using namespace sqm;

TEST_CASE("Table 1 mass") {
    const auto r = mass({0, 0, 1}, ModelParams::table1());
    CHECK(r.mass == doctest::Approx(3.1006).epsilon(0.001 / 3.1006));
    CHECK(r.delta1 == 20.0);
    CHECK(r.omega == doctest::Approx(0.959).epsilon(0.001));
    CHECK(relative_error_pct(r.mass) == doctest::Approx(0.11).epsilon(0.03 / 0.11));
}

TEST_CASE("vanishing perturbation and zero coupling") {
    ModelParams p;
    p.beta = p.B_z * p.B_z / (8.0 * p.m);
    CHECK(mass({0, 0, 1}, p).mass == doctest::Approx(2.0 * 1.3205 + 0.472 * 0.472 / 2.0).epsilon(1e-14));
    CHECK(mass({0, 0, 1}, p).mass == doctest::Approx(2.7524).epsilon(1e-4));
    p.alpha = 0.0;
    p.fixed_omega = 1.0;
    CHECK(mass({0, 0, 1}, p).mass == 2.0 * 1.3205);
}

TEST_CASE("mass is continuous in the field") {
    ModelParams p;
    double last = mass({0, 0, 1}, p).mass;
    for (int k = 1; k <= 100; ++k) {
        p.B_z = 0.15 + 0.001 * k;
        const double m = mass({0, 0, 1}, p).mass;
        CHECK(std::abs(m - last) < 1e-3);
        last = m;
    }
}

TEST_CASE("negative discriminant propagates") {
    ModelParams p;
    p.beta = 0.0;
    p.B_z = 3.0;
    p.alpha = 0.1;
    CHECK_THROWS_AS(mass({0, 0, 1}, p), Error);
}

TEST_CASE("comparison report") {
    const auto rows = comparison_report(mass({0, 0, 1}, ModelParams{}));
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].source == "present");
    CHECK(rows[1].relative_error_pct == 0.0);
    const double printed[] = {0.73, 0.61, 0.03, 0.11, 0.01, 0.05, 0.06};
    for (int k = 0; k < 7; ++k) {
        CHECK(rows[2 + k].relative_error_pct >= 0.0);
        CHECK(std::abs(rows[2 + k].relative_error_pct - printed[k]) < 0.03);
    }
    std::ostringstream csv;
    write_comparison_csv(csv, rows);
    CHECK(csv.str().rfind("source,mass_gev,rel_err_pct\nexperiment", 0) == std::string::npos);
    CHECK(csv.str().find("experiment,3.096900,0.000000\n") != std::string::npos);
    std::ostringstream text;
    write_spectrum_report(text, mass({0, 0, 1}, ModelParams{}), rows);
    CHECK(text.str().find("mass             3.1007 GeV") != std::string::npos);
    CHECK(text.str().find("reference mass   3.1006 GeV (deviation +0.0001)") != std::string::npos);
}
