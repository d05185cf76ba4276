#include "permlab/order_stats.hpp"

#include <algorithm>
#include <cmath>

#include "permlab/errors.hpp"

namespace permlab {

void OrderStatsAccumulator::add_length(std::int64_t m, std::int64_t count) {
  std::int64_t rest = m;
  while (rest > 1) {
    const std::int64_t p = sieve_->smallest_prime_factor(rest);
    int v = 0;
    while (rest % p == 0) {
      rest /= p;
      ++v;
    }
    bool found = false;
    for (auto& e : primes_) {
      if (e.p == p) {
        if (v > e.max_exp) e.max_exp = v;
        e.tot_exp += count * v;
        found = true;
        break;
      }
    }
    if (!found) primes_.push_back({p, v, count * v});
  }
}

OrderStats OrderStatsAccumulator::compute(const CycleType& ct,
                                          bool keep_prime_powers) {
  if (ct.n > sieve_->size())
    throw config_error("order_stats: sieve smaller than n");
  primes_.clear();
  OrderStats out;
  for (const auto& [m, c] : ct.counts) {
    out.log_y += c * std::log(static_cast<double>(m));
    add_length(m, c);
  }
  for (const auto& e : primes_) {
    const double logp = std::log(static_cast<double>(e.p));
    out.log_o += e.max_exp * logp;
    out.delta += static_cast<double>(e.tot_exp - e.max_exp) * logp;
  }
  if (keep_prime_powers) {
    std::vector<std::pair<std::int64_t, int>> pp;
    for (const auto& e : primes_) {
      std::int64_t q = 1;
      for (int j = 1; j <= e.max_exp; ++j) {
        q *= e.p;
        pp.emplace_back(q, 1);
      }
    }
    std::sort(pp.begin(), pp.end());
    out.per_prime_power = std::move(pp);
  }
  return out;
}

double OrderStatsAccumulator::partial_log_order(const CycleType& ct,
                                                std::int64_t cutoff) {
  primes_.clear();
  for (const auto& [m, c] : ct.counts) {
    if (m > cutoff) break;  // counts are ascending in m
    add_length(m, c);
  }
  double log_o = 0.0;
  for (const auto& e : primes_)
    log_o += e.max_exp * std::log(static_cast<double>(e.p));
  return log_o;
}

std::vector<double> OrderStatsAccumulator::partial_profile(
    const CycleType& ct, const std::vector<std::int64_t>& cutoffs) {
  primes_.clear();
  std::vector<double> out(cutoffs.size(), 0.0);
  double log_o = 0.0;
  std::size_t idx = 0;
  for (std::size_t c = 0; c < cutoffs.size(); ++c) {
    if (c > 0 && cutoffs[c] < cutoffs[c - 1])
      throw config_error("partial_profile: cutoffs must be ascending");
    while (idx < ct.counts.size() && ct.counts[idx].first <= cutoffs[c]) {
      const auto& [m, cnt] = ct.counts[idx];
      // incremental: track how much each new length raises the max exponents
      std::int64_t rest = m;
      while (rest > 1) {
        const std::int64_t p = sieve_->smallest_prime_factor(rest);
        int v = 0;
        while (rest % p == 0) {
          rest /= p;
          ++v;
        }
        bool found = false;
        for (auto& e : primes_) {
          if (e.p == p) {
            if (v > e.max_exp) {
              log_o += (v - e.max_exp) * std::log(static_cast<double>(p));
              e.max_exp = v;
            }
            found = true;
            break;
          }
        }
        if (!found) {
          primes_.push_back({p, v, 0});
          log_o += v * std::log(static_cast<double>(p));
        }
      }
      ++idx;
      (void)cnt;
    }
    out[c] = log_o;
  }
  return out;
}

OrderStats order_stats(const CycleType& ct, const MangoldtSieve& sieve,
                       bool keep_prime_powers) {
  OrderStatsAccumulator acc(sieve);
  return acc.compute(ct, keep_prime_powers);
}

double partial_order(const CycleType& ct, const MangoldtSieve& sieve,
                     std::int64_t cutoff) {
  OrderStatsAccumulator acc(sieve);
  return acc.partial_log_order(ct, cutoff);
}

}  // namespace permlab
