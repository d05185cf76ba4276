#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Bad arguments / unsupported parameter regimes. The CLI maps this to exit
// code 2.
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numeric diagnostics (underflow, nonconvergence, retry caps). The CLI maps
// this to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permlab
