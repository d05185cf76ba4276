#pragma once

#include <charconv>
#include <string>

namespace permlab {

// shortest round-trip representation, locale-independent
inline std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace permlab
