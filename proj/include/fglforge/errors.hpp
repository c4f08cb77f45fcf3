#ifndef FGLFORGE_ERRORS_HPP
#define FGLFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fglforge {

// Bad user-facing configuration: a non-prime, bounds too small for the
// requested computation. The CLI maps these to exit status 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TruncationInsufficient : public ConfigError {
public:
    explicit TruncationInsufficient(const std::string& what)
        : ConfigError("truncation insufficient: " + what)
    {
    }
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Mass would land below the retained lower t-degree of a Laurent object.
class WindowOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient that must be p-local (or integral) is not. Outside of
// explicit ideal/divisibility checks this means an implementation bug.
class LocalityFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by the [p]-series produced a coefficient that is not p-local.
class DivisibilityFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fglforge

#endif
