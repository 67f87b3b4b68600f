#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "sqm/errors.hpp"
#include "sqm/fock.hpp"

using namespace sqm;

TEST_CASE("ladder matrix elements") {
    const auto l = build_ladders(4);
    CHECK(std::abs(l.a.element(0, 0, 1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(l.a_dag.element(2, 0, 1, 0) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(l.b.element(0, 2, 0, 3) - std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(l.a.element(0, 0, 0, 0)) == 0.0);
}

TEST_CASE("canonical commutator on the interior") {
    const int cutoff = 5;
    const auto l = build_ladders(cutoff);
    const auto ca = l.a * l.a_dag - l.a_dag * l.a;
    const auto cb = l.b * l.b_dag - l.b_dag * l.b;
    const auto mixed = l.a * l.b_dag - l.b_dag * l.a;
    for (int n1 = 0; n1 < cutoff; ++n1)
        for (int n2 = 0; n2 < cutoff; ++n2)
            for (int m1 = 0; m1 < cutoff; ++m1)
                for (int m2 = 0; m2 < cutoff; ++m2) {
                    const double id = (m1 == n1 && m2 == n2) ? 1.0 : 0.0;
                    CHECK(std::abs(ca.element(m1, m2, n1, n2) - id) < 1e-13);
                    CHECK(std::abs(cb.element(m1, m2, n1, n2) - id) < 1e-13);
                    CHECK(std::abs(mixed.element(m1, m2, n1, n2)) < 1e-13);
                }
}

TEST_CASE("operator errors") {
    CHECK_THROWS_AS(FockOperator(-1), Error);
    CHECK_THROWS_AS(build_ladders(2).a.element(3, 0, 0, 0), Error);
    CHECK_THROWS_AS(build_ladders(2).a * build_ladders(3).a, Error);
}

TEST_CASE("sextic element examples") {
    CHECK(h1_element({0, 0, 0, 0}, 1.0, 1.0) == 48.0);
    CHECK(h1_element({6, 0, 0, 0}, 1.0, 1.0) == doctest::Approx(std::sqrt(720.0)).epsilon(1e-14));
    CHECK(h1_element({0, 0, 0, 0}, 0.9, 0.5) == 24.0);
    CHECK(h1_element({1, 0, 0, 0}, 1.0, 1.0) == 0.0);
    CHECK(h1_element({8, 0, 0, 0}, 1.0, 1.0) == 0.0);
    CHECK(h1_element({4, 4, 0, 0}, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(h1_element({0, 0, 0, 0}, 0.0, 1.0), Error);
    CHECK_THROWS_AS(h1_element({-1, 0, 0, 0}, 1.0, 1.0), Error);
}

TEST_CASE("selection rules, hermiticity and mode symmetry") {
    for (int m1 = 0; m1 <= 8; ++m1)
        for (int m2 = 0; m2 <= 8; ++m2)
            for (int n1 = 0; n1 <= 8; ++n1)
                for (int n2 = 0; n2 <= 8; ++n2) {
                    const double v = h1_element({m1, m2, n1, n2}, 1.0, 1.0);
                    const int d1 = std::abs(m1 - n1);
                    const int d2 = std::abs(m2 - n2);
                    const bool allowed = d1 % 2 == 0 && d2 % 2 == 0 && d1 + d2 <= 6;
                    if (!allowed) CHECK(v == 0.0);
                    if (allowed) CHECK(v > 0.0);
                    CHECK(h1_element({n1, n2, m1, m2}, 1.0, 1.0) == doctest::Approx(v).epsilon(1e-13));
                    CHECK(exactly_equal(sextic_element_exact({n1, n2, m1, m2}), sextic_element_exact({m1, m2, n1, n2})));
                    CHECK(h1_element({m2, m1, n2, n1}, 1.0, 1.0) == v);
                }
}

TEST_CASE("exact comparison") {
    CHECK(exactly_equal({6, 2.0, 1.0}, {3, 8.0, 1.0}));
    CHECK_FALSE(exactly_equal({6, 2.0, 1.0}, {-6, 2.0, 1.0}));
    CHECK_FALSE(exactly_equal({6, 2.0, 1.0}, {6, 3.0, 1.0}));
    CHECK(exactly_equal({0, 2.0, 1.0}, {0, 5.0, 3.0}));
    CHECK(exactly_equal({4, 1.0, 2.0}, {2, 2.0, 1.0}));
}

TEST_CASE("diagonal elements are integers") {
    for (int n1 = 0; n1 <= 6; ++n1)
        for (int n2 = 0; n2 <= 6; ++n2) {
            const auto e = sextic_element_exact({n1, n2, n1, n2});
            CHECK(e.radicand_num == e.radicand_den);
            CHECK(e.value() == static_cast<double>(e.integer));
        }
}

TEST_CASE("dense truncation agrees once the cutoff is large enough") {
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m2 <= 3; ++m2)
            for (int n1 = 0; n1 <= 3; ++n1)
                for (int n2 = 0; n2 <= 3; ++n2) {
                    const MatrixElementQuery q{m1, m2, n1, n2};
                    const double exact = h1_element(q, 1.0, 1.0);
                    CHECK(sextic_element_truncated(q, 9) == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
                }
    // Too small a cutoff loses the intermediate states above the ket.
    CHECK(sextic_element_truncated({0, 0, 0, 0}, 2) < 48.0);
}

TEST_CASE("printed diagonal sum") {
    CHECK(delta1(0, 0) == doctest::Approx(20.0));
    CHECK(delta1(1, 0) == doctest::Approx(67.0 + 2.0 * std::sqrt(2.0)));
    CHECK(delta1(0, 1) == doctest::Approx(63.0 + 2.0 * std::sqrt(2.0)));
    CHECK_THROWS_AS(delta1(-1, 0), Error);
}

TEST_CASE("literal appendix sum") {
    CHECK(appendix_I({0, 0, 0, 0}) == doctest::Approx(20.0));
    CHECK(appendix_I({6, 0, 0, 0}) == doctest::Approx(std::sqrt(720.0)));
    CHECK(appendix_I({0, 6, 0, 0}) == doctest::Approx(std::sqrt(720.0)));
    CHECK(appendix_I({1, 0, 0, 0}) == 0.0);
    CHECK_THROWS_AS(appendix_I({0, 0, -1, 0}), Error);
}

TEST_CASE("diagnostic comparison") {
    const auto report = diagnostic_compare(2);
    CHECK(report.rows.size() == 81);
    const auto* ground = report.find({0, 0, 0, 0});
    REQUIRE(ground != nullptr);
    CHECK(ground->oracle == 48.0);
    CHECK(ground->appendix == doctest::Approx(20.0));
    CHECK(ground->abs_diff == doctest::Approx(28.0));
    REQUIRE(ground->delta1.has_value());
    CHECK(*ground->delta1 == doctest::Approx(20.0));
    CHECK(report.max_abs_diff >= 28.0);
    CHECK(report.find({0, 0, 0, 1})->delta1 == std::nullopt);

    std::ostringstream csv;
    write_diagnostic_csv(csv, report);
    std::string line;
    std::istringstream in(csv.str());
    std::getline(in, line);
    CHECK(line == "m1,m2,n1,n2,oracle,appendix,abs_diff");
    int count = 0;
    while (std::getline(in, line)) ++count;
    CHECK(count == 81);
    CHECK_THROWS_AS(diagnostic_compare(-1), Error);
}
