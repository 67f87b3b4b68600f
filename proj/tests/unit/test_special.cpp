#include <cmath>

#include "doctest.h"
#include "sqm/errors.hpp"
#include "sqm/special.hpp"

using sqm::laguerre;

namespace {

// Explicit power sum L_n^k(x) = sum_j (-1)^j C(n+k, n-j) x^j / j!.
double laguerre_by_sum(int n, int k, double x, double* magnitude = nullptr) {
    double sum = 0.0;
    double mag = 0.0;
    for (int j = 0; j <= n; ++j) {
        double binom = 1.0;
        for (int i = 1; i <= n - j; ++i) binom = binom * (k + j + i) / i;
        double term = binom;
        for (int i = 1; i <= j; ++i) term *= -x / i;
        sum += term;
        mag += std::abs(term);
    }
    if (magnitude) *magnitude = mag;
    return sum;
}

}  // namespace

TEST_CASE("laguerre low orders") {
    CHECK(laguerre(0, 0, 7.3) == 1.0);
    CHECK(laguerre(1, 0, 1.0) == 0.0);
    CHECK(laguerre(2, 0, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(laguerre(1, 3, 0.5) == doctest::Approx(3.5));
}

TEST_CASE("laguerre matches the power sum and libstdc++ assoc_laguerre") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= 6; ++k)
            for (double x : {0.0, 0.3, 1.7, 4.0, 9.5}) {
                double magnitude = 0.0;
                const double ref = laguerre_by_sum(n, k, x, &magnitude);
                CHECK(std::abs(laguerre(n, k, x) - ref) <= 1e-13 * (1.0 + magnitude));
                CHECK(laguerre(n, k, x) ==
                      doctest::Approx(std::assoc_laguerre(static_cast<unsigned>(n), static_cast<unsigned>(k), x))
                          .epsilon(1e-11)
                          .scale(1.0));
            }
}

TEST_CASE("laguerre derivative identity against finite differences") {
    const double h = 1e-4;
    for (int n = 1; n <= 8; ++n)
        for (double x : {0.2, 1.0, 2.5, 5.0}) {
            const double fd = (laguerre(n, 0, x + h) - laguerre(n, 0, x - h)) / (2 * h);
            CHECK(std::abs(fd + laguerre(n - 1, 1, x)) < 1e-6);
        }
}

TEST_CASE("laguerre rejects negative degree") {
    CHECK_THROWS_AS(laguerre(-1, 0, 1.0), sqm::Error);
}

TEST_CASE("sqrt_factorial_ratio") {
    CHECK(sqm::sqrt_factorial_ratio(6, 0) == doctest::Approx(std::sqrt(720.0)));
    CHECK(sqm::sqrt_factorial_ratio(3, 3) == 1.0);
    CHECK_THROWS_AS(sqm::sqrt_factorial_ratio(2, 3), sqm::Error);
}
