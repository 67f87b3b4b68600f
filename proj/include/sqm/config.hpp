#pragma once

#include <string>
#include <string_view>

#include "sqm/model.hpp"
#include "sqm/wigner.hpp"

namespace sqm {

struct RunConfig {
    ModelParams params;
    StateLabel label;
    SliceSpec slice;
    std::string out_dir = ".";
};

/// Flat key=value document; '#' starts a comment, blank lines are ignored.
/// Missing keys keep the defaults of ModelParams::table1(). Throws ConfigError
/// naming the offending line on unknown or duplicate keys, malformed values
/// and constraint violations.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; IoError when it cannot be read.
RunConfig load_config(const std::string& path);

}  // namespace sqm
