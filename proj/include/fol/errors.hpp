#pragma once

#include <stdexcept>
#include <string>

namespace fol {

enum class ErrorKind {
    SyntaxError,
    NotHomogeneous,
    ResourceLimit,
    NotACurve,
    WindowTooSmall,
    DegreeMismatch,
    DegreeOverflow,
    WrongFormDegree,
    ZeroForm,
    NotProjective,
    NotContact,
    ProportionalInput,
    SamplingFailed,
    UnsupportedRank,
    UnsupportedFormIndex,
    InvalidProfile,
    NegativeTwist,
    OutOfBounds,
    NonIntegralGenus,
    InconsistentTriple,
    Impossible,
    DegreeTooSmall,
    CrossCheckFailure,
    NonIntegralChern,
    NotTemplateMode,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    const char* kind_name() const noexcept { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fol
