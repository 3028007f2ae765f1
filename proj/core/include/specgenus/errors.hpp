#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specgenus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad germ specification, weights, Puiseux pairs, family parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

class InvalidWeightError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Raised when a fractional-exponent polynomial quotient leaves a remainder.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

class NotConvenientError : public Error {
public:
    using Error::Error;
};

class RefusedWithoutNondegeneracyFlag : public Error {
public:
    using Error::Error;
};

class MonodromyOrderError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Two independent computation routes disagreed. Always a bug or an invalid input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Parse failure with a 0-based character offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class ConstantTermError : public ParseError {
public:
    using ParseError::ParseError;
};

class EmptySupportError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace specgenus
