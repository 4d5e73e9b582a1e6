#include "quadzero/error.hpp"

namespace quadzero {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::PoleAtCriticalPoint: return "PoleAtCriticalPoint";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotARootAtOne: return "NotARootAtOne";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroOnContour: return "ZeroOnContour";
    case ErrorKind::SampleCapExceeded: return "SampleCapExceeded";
    case ErrorKind::AmbiguousWinding: return "AmbiguousWinding";
    case ErrorKind::DegenerateJacobian: return "DegenerateJacobian";
    case ErrorKind::BoundUnavailable: return "BoundUnavailable";
    case ErrorKind::BEqualsOne: return "BEqualsOne";
    case ErrorKind::BZero: return "BZero";
    }
    return "Unknown";
}

bool is_hypothesis_error(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::HypothesisViolation:
    case ErrorKind::BoundUnavailable:
    case ErrorKind::BEqualsOne:
    case ErrorKind::BZero:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::NotARootAtOne:
    case ErrorKind::NoSignChange:
        return true;
    default:
        return false;
    }
}

} // namespace quadzero
