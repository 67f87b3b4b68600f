#pragma once

namespace sqm {

/// Associated Laguerre polynomial L_n^k(x) by the upward three-term
/// recurrence. k = 0 gives the ordinary L_n.
double laguerre(int n, int k, double x);

/// sqrt(hi! / lo!) for hi >= lo >= 0, accumulated as a product.
double sqrt_factorial_ratio(int hi, int lo);

}  // namespace sqm
