#include "sqm/special.hpp"

#include <cmath>
#include <string>

#include "sqm/errors.hpp"

namespace sqm {

double laguerre(int n, int k, double x) {
    if (n < 0 || k < 0) fail(ErrorCode::InvalidArgument, "laguerre: negative degree or order");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + k - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double sqrt_factorial_ratio(int hi, int lo) {
    if (lo < 0 || hi < lo) fail(ErrorCode::InvalidArgument, "sqrt_factorial_ratio: need hi >= lo >= 0");
    double prod = 1.0;
    for (int j = lo + 1; j <= hi; ++j) prod *= j;
    return std::sqrt(prod);
}

}  // namespace sqm
