#pragma once

#include <stdexcept>
#include <string>

namespace htile {

enum class ErrorCode {
    MalformedInput,
    UnknownFace,
    DegenerateSubdivision,
    NotPseudomanifold,
    Guardrail,
    NothingToDo,
    DimensionMismatch,
    InvalidInput,
    Parse,
    Io,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace htile
