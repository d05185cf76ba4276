#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permlab/cycle_type.hpp"
#include "permlab/poisson_lattice.hpp"
#include "permlab/rng.hpp"
#include "permlab/weights.hpp"

// Exact-law cycle-type samplers. The recursive method repeatedly draws the
// length of the cycle containing a fixed element of the remainder,
// P[length = m | r remaining] = theta_m h_{r-m} / (r h_r), using log-space
// h-ratios from the table. The rejection (Boltzmann) method draws independent
// Poisson counts at the saddle t and accepts when sum m Z_m = n.

namespace permlab {

enum class SampleMethod { kRecursive, kRejection };

struct SamplerConfig {
  double gamma = 1.0;
  std::int64_t n = 1;
  SampleMethod method = SampleMethod::kRecursive;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Value-type worker: one instance per thread of execution; state is just the
// Philox stream plus immutable shared inputs.
class CycleTypeSampler {
 public:
  // recursive sampler over the table's weight sequence; requires tab.size() >= n
  static CycleTypeSampler recursive(const NormalizationTable& tab,
                                    std::int64_t n, std::uint64_t seed,
                                    std::uint64_t stream);
  // rejection sampler at the spec's radius; the retry cap is 10^7 attempts
  static CycleTypeSampler rejection(PoissonSpec spec, std::uint64_t seed,
                                    std::uint64_t stream);

  CycleType sample();
  // cycle lengths in draw order (recursive) / assignment order (rejection)
  std::vector<std::int64_t> sample_lengths();

  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepted() const { return accepted_; }
  // accepted/attempted over the life of this sampler (rejection method)
  double acceptance_rate() const;

 private:
  CycleTypeSampler(const NormalizationTable* tab, std::int64_t n,
                   std::uint64_t seed, std::uint64_t stream);
  CycleTypeSampler(PoissonSpec spec, std::uint64_t seed, std::uint64_t stream);

  void recursive_lengths(std::vector<std::int64_t>& out);
  bool rejection_attempt(std::vector<std::int64_t>& out);

  const NormalizationTable* tab_ = nullptr;  // recursive mode
  std::optional<PoissonSpec> spec_;          // rejection mode
  std::int64_t n_;
  Philox rng_;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepted_ = 0;

  // Walker alias table over m = 1..n with probabilities means[m]/total
  std::vector<double> alias_prob_;
  std::vector<std::int32_t> alias_idx_;
  double total_mean_ = 0.0;
};

// Spec-level convenience: build the right sampler from a config. The table is
// required for the recursive method and ignored by the rejection method.
CycleTypeSampler make_sampler(const SamplerConfig& cfg,
                              const NormalizationTable* tab);

// Measured acceptance rate of the rejection sampler after drawing `samples`
// accepted cycle types.
double acceptance_rate_estimate(const PoissonSpec& spec, std::uint64_t seed,
                                std::uint64_t stream, std::int64_t samples);

}  // namespace permlab
