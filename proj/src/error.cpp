#include "gbs/error.hpp"

namespace gbs {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidDimension:
            return "invalid-dimension";
        case ErrorCode::UndefinedGcd:
            return "undefined-gcd";
        case ErrorCode::InvalidCoordinate:
            return "invalid-coordinate";
        case ErrorCode::DuplicateCoordinate:
            return "duplicate-coordinate";
        case ErrorCode::EmptyDifference:
            return "empty-difference";
        case ErrorCode::InvalidMcsIndex:
            return "invalid-mcs-index";
        case ErrorCode::AmbiguousMembership:
            return "ambiguous-membership";
        case ErrorCode::OracleDimension:
            return "oracle-dimension";
        case ErrorCode::Degeneracy:
            return "degeneracy";
        case ErrorCode::WrongBranch:
            return "wrong-branch";
        case ErrorCode::InvalidConfig:
            return "invalid-config";
        case ErrorCode::Parse:
            return "parse";
    }
    return "unknown";
}

}  // namespace gbs
