#pragma once

#include <stdexcept>
#include <string>

namespace cloaklab {

/// Invalid configuration or argument combination (bad sizes, out-of-range
/// parameters, malformed input). Maps to CLI exit code 3.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Evaluation requested outside a function's mathematical domain.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation exactly on a singular point (Green's function at its pole,
/// a source location, a map interface where the Jacobian is undefined).
struct SingularityError : std::domain_error {
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

/// A quadrature or iteration failed to stabilize within its budget.
struct AccuracyError : std::runtime_error {
    explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency violation (a construction produced something its own
/// postcondition forbids).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cloaklab
