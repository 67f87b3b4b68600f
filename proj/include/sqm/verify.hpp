#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqm/model.hpp"

namespace sqm {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Invariant suite behind the `verify` command: star algebra, ladder and
/// selection rules, the frequency equation, Wigner normalization and the
/// Bohlin map. Model-dependent checks use `params`.
std::vector<CheckResult> run_verification_suite(const ModelParams& params);

/// One "PASS|FAIL name: detail" line per check.
void write_verification(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sqm
