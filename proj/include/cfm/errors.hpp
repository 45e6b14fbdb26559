#pragma once

#include <stdexcept>
#include <string>

namespace cfm {

// Reached the configured term / enumeration / iteration budget before the
// requested tolerance. CLI maps this to exit code 3.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Monotone objective has no root in the search bracket.
struct no_sign_change : std::runtime_error {
  explicit no_sign_change(const std::string& what) : std::runtime_error(what) {}
};

// Iteration failed to settle within the iteration cap.
struct non_convergence : std::runtime_error {
  explicit non_convergence(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-facing input (CLI maps to exit code 2).
struct validation_error : std::invalid_argument {
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cfm
