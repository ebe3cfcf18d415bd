#pragma once

#include <stdexcept>
#include <string>

namespace patav {

// An argument violated an operation's precondition (value out of range,
// malformed input, non-finite parameter).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Pattern is outside the set an operation supports.
class UnsupportedPatternError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// A configured size cap was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, long long cap)
        : std::runtime_error(what), cap_(cap) {}
    long long cap() const noexcept { return cap_; }

private:
    long long cap_;
};

// An algebraic cancellation that must hold did not. Signals a bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The optimizer of a Legendre-Fenchel transform left its search bracket.
class SaturationError : public std::domain_error {
public:
    SaturationError(const std::string& what, double boundary_value)
        : std::domain_error(what), boundary_value_(boundary_value) {}
    double boundary_value() const noexcept { return boundary_value_; }

private:
    double boundary_value_;
};

class UndefinedGrowthError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace patav
