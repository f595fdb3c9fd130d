#pragma once

#include <stdexcept>
#include <string>

namespace unimat {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (matrix files, config files). CLI maps these to exit 2.
struct ParseError : Error {
    using Error::Error;
};
struct MalformedHeader : ParseError {
    using ParseError::ParseError;
};
struct RowLengthMismatch : ParseError {
    using ParseError::ParseError;
};
struct NonIntegerToken : ParseError {
    using ParseError::ParseError;
};

// Precondition violations on otherwise well-formed values. CLI maps these to exit 1.
struct DomainError : Error {
    using Error::Error;
};
struct EmptyInput : DomainError {
    using DomainError::DomainError;
};
struct NotSquare : DomainError {
    using DomainError::DomainError;
};
struct NotPrime : DomainError {
    using DomainError::DomainError;
};
struct SingularMatrix : DomainError {
    using DomainError::DomainError;
};
struct RankDeficient : DomainError {
    using DomainError::DomainError;
};
struct NotCoprime : DomainError {
    using DomainError::DomainError;
};
struct ColumnMismatch : DomainError {
    using DomainError::DomainError;
};
struct BadShape : DomainError {
    using DomainError::DomainError;
};
struct TooLarge : DomainError {
    using DomainError::DomainError;
};
struct InvalidParams : DomainError {
    using DomainError::DomainError;
};
struct NotPrimitive : DomainError {
    using DomainError::DomainError;
};

// A Las Vegas loop gave up. CLI maps this to exit 3.
struct RestartLimitExceeded : Error {
    using Error::Error;
};

}  // namespace unimat
