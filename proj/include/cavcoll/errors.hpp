#pragma once

#include <stdexcept>
#include <string>

namespace cavcoll {

// Input outside the mathematical domain of an operation (e.g. blue detuning).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Missing or invalid configuration field. field() is the dotted path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Integration step larger than the stability bound.
class StepSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Multiple-passage series whose ratio is >= 1.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cavcoll
