#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contractk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EdgeNotPresent : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

class DisconnectedBlock : public Error {
public:
    using Error::Error;
};

class InvalidWitness : public Error {
public:
    using Error::Error;
};

class NotSplit : public Error {
public:
    using Error::Error;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class BudgetTooLarge : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class InvalidSourceCertificate : public Error {
public:
    using Error::Error;
};

/// A solver reached a state its own invariants rule out. Never a valid NO.
class InternalInvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string & what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

} // namespace contractk
