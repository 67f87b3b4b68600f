#include "sqm/errors.hpp"

namespace sqm {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::OmegaMismatch: return "OMEGA_MISMATCH";
        case ErrorCode::GridTooCoarse: return "GRID_TOO_COARSE";
        case ErrorCode::DegenerateCoupling: return "DEGENERATE_COUPLING";
        case ErrorCode::NegativeDiscriminant: return "NEGATIVE_DISCRIMINANT";
        case ErrorCode::OriginSingularity: return "ORIGIN_SINGULARITY";
        case ErrorCode::ImaginaryResidue: return "IMAGINARY_RESIDUE";
        case ErrorCode::BoxTooSmall: return "BOX_TOO_SMALL";
        case ErrorCode::ConfigError: return "CONFIG_ERROR";
        case ErrorCode::IoError: return "IO_ERROR";
    }
    return "UNKNOWN";
}

}  // namespace sqm
