#pragma once

#include <iosfwd>
#include <string>

#include "sqm/config.hpp"
#include "sqm/errors.hpp"

namespace sqm {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitDomain = 3, kExitVerification = 4 };

/// Exit status for an error category: configuration and I/O problems map to
/// kExitConfig, everything else to kExitDomain.
int exit_code_for(ErrorCode code);

/// Runs spectrum | wigner | negativity | verify | report | diagnose, writing
/// output files into cfg.out_dir. Every file is produced in memory first and
/// then moved into place by rename, so a failing run writes nothing.
/// Human-readable progress goes to `out`; the single error line to `err`.
int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sqm
