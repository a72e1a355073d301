#pragma once

#include <stdexcept>
#include <string>

namespace genera {

/// Machine-readable error categories; the CLI maps them to exit codes and
/// emits them in structured error documents.
enum class ErrorKind {
    AlgebraMismatch,
    DegreeOutOfRange,
    NoFundamentalClass,
    InvalidPresentation,
    TooLarge,
    SeriesNotUnital,
    SeriesNotNilpotent,
    NotATotalClass,
    UnknownPiClass,
    ExprError,
    UnsupportedDimension,
    TransportError,
    CorrespondenceError,
    NotInvariant,
    SyntaxError,
    UsageError,
};

const char* to_string(ErrorKind kind);

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Syntax error in the variety DSL or a class expression; positions are
/// 1-based, column 0 meaning "unknown".
class SyntaxError : public DomainError {
public:
    SyntaxError(const std::string& message, int line, int column)
        : DomainError(ErrorKind::SyntaxError, message), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw DomainError(kind, message);
}

} // namespace genera
