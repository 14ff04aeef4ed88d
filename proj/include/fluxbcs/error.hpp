#pragma once

#include <stdexcept>
#include <string>

namespace fluxbcs {

/// Input outside the physical or mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Enumeration request larger than the configured limits.
class SizeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed user input (CSV, JSON, command-line values).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fluxbcs
