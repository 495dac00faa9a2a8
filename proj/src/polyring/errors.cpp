#include "fol/errors.hpp"

namespace fol {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::NotACurve: return "NotACurve";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::WrongFormDegree: return "WrongFormDegree";
        case ErrorKind::ZeroForm: return "ZeroForm";
        case ErrorKind::NotProjective: return "NotProjective";
        case ErrorKind::NotContact: return "NotContact";
        case ErrorKind::ProportionalInput: return "ProportionalInput";
        case ErrorKind::SamplingFailed: return "SamplingFailed";
        case ErrorKind::UnsupportedRank: return "UnsupportedRank";
        case ErrorKind::UnsupportedFormIndex: return "UnsupportedFormIndex";
        case ErrorKind::InvalidProfile: return "InvalidProfile";
        case ErrorKind::NegativeTwist: return "NegativeTwist";
        case ErrorKind::OutOfBounds: return "OutOfBounds";
        case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
        case ErrorKind::InconsistentTriple: return "InconsistentTriple";
        case ErrorKind::Impossible: return "Impossible";
        case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
        case ErrorKind::NonIntegralChern: return "NonIntegralChern";
        case ErrorKind::NotTemplateMode: return "NotTemplateMode";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace fol
