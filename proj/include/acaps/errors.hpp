#pragma once

#include <stdexcept>
#include <string>

namespace acaps {

enum class ErrorKind {
    InvalidArgument,
    NoClearance,
    SphereFluxMismatch,
    SingularPoint,
    EmptyBasis,
    GridTooCoarse,
    NorthPole,
    PolePoint,
    DomainError,
};

const char* to_string(ErrorKind kind);

// Numerical failures map to CLI exit code 3, the rest are input problems (exit 2).
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace acaps
