#ifndef MECSCHED_ERRORS_HPP
#define MECSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mecsched {

/// Malformed or inconsistent configuration input (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exhaustive-search request exceeds the documented size cap (CLI exit code 3).
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A rate inverse below the peak-power floor was requested (CLI exit code 3).
class InfeasiblePowerError : public std::domain_error {
public:
    explicit InfeasiblePowerError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace mecsched

#endif
