#pragma once

#include <stdexcept>
#include <string>

namespace nf {

// Invalid parameters, config files, CLI usage. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Domain violations and solver failures (pole proximity, non-convergence,
// divergence, singular directions). CLI exit code 3.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failures with path context. CLI exit code 4.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nf
