#pragma once

#include <stdexcept>
#include <string>

namespace fleetmaint {

/// Raised for invalid configuration values (ranges, schema, parameters).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an exhaustive search would exceed its evaluation budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fleetmaint
