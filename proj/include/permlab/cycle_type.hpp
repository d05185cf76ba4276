#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

// Multiset of cycle lengths of a permutation of n, stored as sparse counts
// (m, C_m) with ascending m and C_m > 0. Invariant: sum m*C_m = n.
struct CycleType {
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> counts;

  std::int64_t count_of(std::int64_t m) const {
    for (const auto& [len, c] : counts)
      if (len == m) return c;
    return 0;
  }

  // total number of cycles
  std::int64_t total_cycles() const {
    std::int64_t t = 0;
    for (const auto& [len, c] : counts) t += c;
    return t;
  }

  // dash-separated lengths, longest first, e.g. "3-2-2-1"
  std::string to_string() const;

  // builds from an unsorted list of cycle lengths
  static CycleType from_lengths(const std::vector<std::int64_t>& lengths);

  bool operator==(const CycleType&) const = default;
};

// throws config_error when sum m*C_m != n
void validate(const CycleType& ct);

}  // namespace permlab
