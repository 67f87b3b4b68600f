#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqm {

enum class ErrorCode {
    InvalidArgument,
    OmegaMismatch,
    GridTooCoarse,
    DegenerateCoupling,
    NegativeDiscriminant,
    OriginSingularity,
    ImaginaryResidue,
    BoxTooSmall,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. `code()` carries the
/// machine-readable category the CLI maps onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace sqm
