#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permlab/cycle_type.hpp"
#include "permlab/special.hpp"

// log Y_n = sum C_m log m, log O_n = log lcm of the cycle lengths expanded
// over prime powers (log O_n = sum_q Lambda(q) D*_{nq}), and the partial-order
// functional O_{x*} = lcm{m <= x*; C_m > 0}.

namespace permlab {

struct OrderStats {
  double log_y = 0.0;
  double log_o = 0.0;
  // delta = log Y - log O >= 0; accumulated from the integer exponent gaps
  // sum_p (E_p - e_p) log p, so the sign is exact
  double delta = 0.0;
  // q -> D*_{nq} over prime powers q with D*_{nq} = 1 (diagnostics only)
  std::optional<std::vector<std::pair<std::int64_t, int>>> per_prime_power;
};

// Reusable workspace: one instance per thread keeps the per-sample
// computation allocation-free.
class OrderStatsAccumulator {
 public:
  explicit OrderStatsAccumulator(const MangoldtSieve& sieve)
      : sieve_(&sieve) {}

  OrderStats compute(const CycleType& ct, bool keep_prime_powers = false);

  // log of lcm{m <= cutoff; C_m > 0}; empty lcm is 1, so the result is 0
  double partial_log_order(const CycleType& ct, std::int64_t cutoff);

  // partial log-orders at several cutoffs in one ascending sweep
  std::vector<double> partial_profile(const CycleType& ct,
                                      const std::vector<std::int64_t>& cutoffs);

 private:
  struct PrimeEntry {
    std::int64_t p;
    int max_exp;          // e_p = max_m v_p(m) over present lengths
    std::int64_t tot_exp; // E_p = sum_m C_m v_p(m)
  };
  void add_length(std::int64_t m, std::int64_t count);
  const MangoldtSieve* sieve_;
  std::vector<PrimeEntry> primes_;
};

OrderStats order_stats(const CycleType& ct, const MangoldtSieve& sieve,
                       bool keep_prime_powers = false);
double partial_order(const CycleType& ct, const MangoldtSieve& sieve,
                     std::int64_t cutoff);

}  // namespace permlab
