#include "permlab/cycle_type.hpp"

#include <algorithm>
#include <map>

#include "permlab/errors.hpp"

namespace permlab {

std::string CycleType::to_string() const {
  std::string s;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    for (std::int64_t c = 0; c < it->second; ++c) {
      if (!s.empty()) s += '-';
      s += std::to_string(it->first);
    }
  }
  return s;
}

CycleType CycleType::from_lengths(const std::vector<std::int64_t>& lengths) {
  std::map<std::int64_t, std::int64_t> acc;
  std::int64_t n = 0;
  for (std::int64_t m : lengths) {
    ++acc[m];
    n += m;
  }
  CycleType ct;
  ct.n = n;
  ct.counts.assign(acc.begin(), acc.end());
  return ct;
}

void validate(const CycleType& ct) {
  std::int64_t total = 0;
  for (const auto& [m, c] : ct.counts) {
    if (m < 1 || c < 1) throw config_error("CycleType: bad entry");
    total += m * c;
  }
  if (total != ct.n) throw config_error("CycleType: sum m*C_m != n");
}

}  // namespace permlab
