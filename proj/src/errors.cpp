#include "genera/errors.hpp"

namespace genera {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::NoFundamentalClass: return "NoFundamentalClass";
        case ErrorKind::InvalidPresentation: return "InvalidPresentation";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::SeriesNotUnital: return "SeriesNotUnital";
        case ErrorKind::SeriesNotNilpotent: return "SeriesNotNilpotent";
        case ErrorKind::NotATotalClass: return "NotATotalClass";
        case ErrorKind::UnknownPiClass: return "UnknownPiClass";
        case ErrorKind::ExprError: return "ExprError";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::TransportError: return "TransportError";
        case ErrorKind::CorrespondenceError: return "CorrespondenceError";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

} // namespace genera
