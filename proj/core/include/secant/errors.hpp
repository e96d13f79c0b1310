#pragma once

#include <stdexcept>
#include <string>

namespace secant {

// Division by an exactly-zero scalar (rational or rational function).
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Evaluation of a rational function at a root of its denominator.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Input outside the validity domain of an operation (e.g. d < 4).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Structurally invalid input: mismatched variable lists, non-divisor
// classes where a divisor is required, unknown names, bad config data.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A symbolic comparison whose sign is not constant on the validity
// domain; the exact min/max selection cannot proceed.
class IndefiniteSign : public std::domain_error {
public:
    explicit IndefiniteSign(const std::string& what) : std::domain_error(what) {}
};

} // namespace secant
