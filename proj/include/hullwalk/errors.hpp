#pragma once

#include <stdexcept>
#include <string>

namespace hullwalk {

// Invalid experiment configuration; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A combinatorial estimator was asked for an instance beyond its budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hullwalk
