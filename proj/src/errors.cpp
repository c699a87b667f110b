#include "acaps/errors.hpp"

namespace acaps {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NoClearance: return "NoClearance";
        case ErrorKind::SphereFluxMismatch: return "SphereFluxMismatch";
        case ErrorKind::SingularPoint: return "SingularPoint";
        case ErrorKind::EmptyBasis: return "EmptyBasis";
        case ErrorKind::GridTooCoarse: return "GridTooCoarse";
        case ErrorKind::NorthPole: return "NorthPole";
        case ErrorKind::PolePoint: return "PolePoint";
        case ErrorKind::DomainError: return "DomainError";
    }
    return "Unknown";
}

bool is_numerical(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::GridTooCoarse:
        case ErrorKind::SingularPoint:
        case ErrorKind::PolePoint:
        case ErrorKind::DomainError:
            return true;
        default:
            return false;
    }
}

}  // namespace acaps
