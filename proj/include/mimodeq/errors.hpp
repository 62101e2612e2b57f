#pragma once

#include <stdexcept>
#include <string>

namespace mimodeq {

/// Invalid or inconsistent configuration input (CLI exit code 2).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: non-convergence, invariant violation, bad factorization
/// (CLI exit code 1).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mimodeq
