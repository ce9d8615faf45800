#pragma once

#include <stdexcept>
#include <string>

namespace twk {

// Bad user input: malformed config file, out-of-range parameter, missing path.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver or estimator could not produce a result (root not bracketed,
// degenerate fit, non-decaying data). The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twk
