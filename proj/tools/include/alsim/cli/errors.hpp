#pragma once

#include <stdexcept>

namespace alsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;

/// Invalid configuration or malformed input file. Maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure. Maps to exit code 2.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace alsim::cli
