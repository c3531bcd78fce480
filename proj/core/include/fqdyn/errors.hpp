#pragma once

#include <stdexcept>
#include <string>

namespace fqdyn {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MixedFieldsError : Error {
    explicit MixedFieldsError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& msg) : Error(msg) {}
};

struct ZeroInputError : Error {
    explicit ZeroInputError(const std::string& msg) : Error(msg) {}
};

struct NotSeparableError : Error {
    explicit NotSeparableError(const std::string& msg) : Error(msg) {}
};

struct RhoUndefinedError : Error {
    explicit RhoUndefinedError(const std::string& msg) : Error(msg) {}
};

struct BadDegreesError : Error {
    explicit BadDegreesError(const std::string& msg) : Error(msg) {}
};

struct NotInFiberError : Error {
    explicit NotInFiberError(const std::string& msg) : Error(msg) {}
};

struct NotAdditiveError : Error {
    explicit NotAdditiveError(const std::string& msg) : Error(msg) {}
};

struct WrongShapeError : Error {
    explicit WrongShapeError(const std::string& msg) : Error(msg) {}
};

struct WrongRegimeError : Error {
    explicit WrongRegimeError(const std::string& msg) : Error(msg) {}
};

struct InexactDivisionError : Error {
    explicit InexactDivisionError(const std::string& msg) : Error(msg) {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

struct AssertionFailedError : Error {
    explicit AssertionFailedError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct NotBinomialError : Error {
    explicit NotBinomialError(const std::string& msg) : Error(msg) {}
};

}  // namespace fqdyn
