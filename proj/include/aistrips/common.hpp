#pragma once

#include <stdexcept>
#include <string>

namespace ais {

// Unrecoverable input/schema problem. The CLI maps this to exit code 1.
class FatalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration (bad flag value, impossible parameter combination).
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitFatal = 1;
inline constexpr int kExitConfig = 2;

}  // namespace ais
