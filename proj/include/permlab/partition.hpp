#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "permlab/cycle_type.hpp"
#include "permlab/weights.hpp"

// Exact brute-force ground truth for small n: enumerate partitions of n,
// weight them by (1/z_lambda) prod theta_m^{C_m}, and derive exact laws.
// Everything here is the oracle side of the DP / sampler / asymptotics tests.

namespace permlab {

// Calls fn with each partition of n as a descending parts vector, in
// reverse-lexicographic order (iterative, no recursion). n >= 1.
void for_each_partition(std::int64_t n,
                        const std::function<void(const std::vector<std::int64_t>&)>& fn);

struct WeightedEntry {
  CycleType type;
  double prob = 0.0;
  mpq_class prob_exact;  // valid only when the law is exact
};

// Exhaustive exact law over cycle types of S_n under P_Theta. h_n is
// recovered as the pre-normalization total weight.
struct WeightedPartitionLaw {
  std::int64_t n = 0;
  bool exact = false;
  std::vector<WeightedEntry> entries;
  mpq_class h_exact;    // exact mode only
  double log_h = 0.0;   // both modes
};

// n <= 45 (p(45) = 89134). Rational probabilities when the weights have an
// exact form, long-double accumulation otherwise.
WeightedPartitionLaw enumerate_law(const WeightSequence& w, std::int64_t n);

// d_TV(L(C_1..C_b), L(Z_1..Z_b)) with Z_m independent Poisson(theta_m/m t^m),
// computed as sum_x (P(x) - Q(x))^+ over the support of the conditioned law.
// n <= 25; the joint support map is capped at 10^7 entries.
double exact_tv_distance(const WeightSequence& w, std::int64_t n,
                         std::int64_t b, double t);

struct OrderLawEntry {
  CycleType type;
  double prob = 0.0;
  double log_order = 0.0;
  double log_y = 0.0;
};

struct ExactOrderLaw {
  std::int64_t n = 0;
  std::vector<OrderLawEntry> entries;
  double mean_log_order = 0.0;
  double mean_log_y = 0.0;
};

// Exact joint distribution of (log O_n, log Y_n): per cycle type the order is
// computed both by big-integer lcm and by the von Mangoldt prime-power route;
// the two exponent vectors must agree exactly. n <= 45.
ExactOrderLaw exact_order_law(const WeightSequence& w, std::int64_t n);

// rows: cycle_type (dash-separated lengths), probability, log_order, log_y
void dump_order_law_csv(const ExactOrderLaw& law, std::ostream& os);

}  // namespace permlab
