#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadzero {

enum class ErrorKind {
    InvalidArgument,
    HypothesisViolation,
    PoleAtCriticalPoint,
    ZeroPolynomial,
    NotARootAtOne,
    NoSignChange,
    NonConvergence,
    ZeroOnContour,
    SampleCapExceeded,
    AmbiguousWinding,
    DegenerateJacobian,
    BoundUnavailable,
    BEqualsOne,
    BZero,
};

std::string_view to_string(ErrorKind kind);

/// Hypothesis-type errors mean "the requested result is not defined for these
/// parameters"; everything else is a numerical failure.
bool is_hypothesis_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace quadzero
