#pragma once

#include <stdexcept>
#include <string>

namespace gbs {

enum class ErrorCode {
    InvalidDimension,
    UndefinedGcd,
    InvalidCoordinate,
    DuplicateCoordinate,
    EmptyDifference,
    InvalidMcsIndex,
    AmbiguousMembership,
    OracleDimension,
    Degeneracy,
    WrongBranch,
    InvalidConfig,
    Parse,
};

const char *error_code_name(ErrorCode code);

/// Library-wide exception. `code()` lets callers (the CLI in particular) map
/// failures onto exit codes without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace gbs
