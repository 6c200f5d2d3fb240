#pragma once

// Shared error types and small utilities.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace aoweno {

/// Bad user input: unknown problem/scheme name, malformed config, invalid flag
/// combination. CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The computation itself went wrong: NaN/Inf in the solution, loss of
/// positivity, a nonlinear solve that failed to converge. CLI maps this to
/// exit code 2.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double sq(double x) { return x * x; }

inline bool finite(double x) { return std::isfinite(x); }

/// FNV-1a 64-bit hash, used for cache file names derived from recipe strings.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace aoweno
