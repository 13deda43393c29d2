#pragma once

#include <stdexcept>
#include <string>

namespace omegader {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Raised when a number-field modulus turns out to be reducible, or when its
// irreducibility cannot be verified by the implemented checks.
class ReducibleModulus : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Malformed algebra document or coefficient expression. `field` names the
// offending document field when known.
class DocumentError : public Error {
public:
    DocumentError(std::string field, const std::string& what)
        : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace omegader
