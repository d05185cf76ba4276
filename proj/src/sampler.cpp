#include "permlab/sampler.hpp"

#include <cmath>

#include "permlab/errors.hpp"

namespace permlab {

namespace {
constexpr std::uint64_t kRetryCap = 10'000'000;
}

CycleTypeSampler CycleTypeSampler::recursive(const NormalizationTable& tab,
                                             std::int64_t n,
                                             std::uint64_t seed,
                                             std::uint64_t stream) {
  if (n < 1 || n > tab.size())
    throw config_error("CycleTypeSampler: table smaller than n");
  return CycleTypeSampler(&tab, n, seed, stream);
}

CycleTypeSampler CycleTypeSampler::rejection(PoissonSpec spec,
                                             std::uint64_t seed,
                                             std::uint64_t stream) {
  return CycleTypeSampler(std::move(spec), seed, stream);
}

CycleTypeSampler::CycleTypeSampler(const NormalizationTable* tab,
                                   std::int64_t n, std::uint64_t seed,
                                   std::uint64_t stream)
    : tab_(tab), n_(n), rng_(seed, stream) {}

CycleTypeSampler::CycleTypeSampler(PoissonSpec spec, std::uint64_t seed,
                                   std::uint64_t stream)
    : spec_(std::move(spec)), n_(spec_->n), rng_(seed, stream) {
  // Walker alias table over m = 1..n, category probabilities means[m]/total
  const std::int64_t n = n_;
  total_mean_ = spec_->total_mean();
  alias_prob_.assign(n, 0.0);
  alias_idx_.assign(n, 0);
  std::vector<double> scaled(n);
  for (std::int64_t m = 1; m <= n; ++m)
    scaled[m - 1] = spec_->means[m] / total_mean_ * n;
  std::vector<std::int32_t> small, large;
  for (std::int64_t i = 0; i < n; ++i)
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::int32_t>(i));
  while (!small.empty() && !large.empty()) {
    const std::int32_t s = small.back();
    small.pop_back();
    const std::int32_t l = large.back();
    alias_prob_[s] = scaled[s];
    alias_idx_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::int32_t i : large) alias_prob_[i] = 1.0;
  for (std::int32_t i : small) alias_prob_[i] = 1.0;
}

void CycleTypeSampler::recursive_lengths(std::vector<std::int64_t>& out) {
  out.clear();
  std::int64_t r = n_;
  while (r > 0) {
    const double u = rng_.next_double();
    const double base = tab_->log_h(r) + std::log(static_cast<double>(r));
    double cum = 0.0;
    std::int64_t m = r;  // fallback absorbs rounding in the cumulative scan
    for (std::int64_t j = 1; j <= r; ++j) {
      cum += std::exp(tab_->log_theta(j) + tab_->log_h(r - j) - base);
      if (u < cum) {
        m = j;
        break;
      }
    }
    out.push_back(m);
    r -= m;
  }
}

bool CycleTypeSampler::rejection_attempt(std::vector<std::int64_t>& out) {
  out.clear();
  const std::int64_t count = poisson_draw(rng_, total_mean_);
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    const std::uint64_t col = rng_.next_bounded(static_cast<std::uint64_t>(n_));
    const double coin = rng_.next_double();
    const std::int64_t m =
        (coin < alias_prob_[col]) ? static_cast<std::int64_t>(col) + 1
                                  : static_cast<std::int64_t>(alias_idx_[col]) + 1;
    out.push_back(m);
    total += m;
    if (total > n_) return false;  // cannot come back down, draw is void
  }
  return total == n_;
}

std::vector<std::int64_t> CycleTypeSampler::sample_lengths() {
  std::vector<std::int64_t> lengths;
  if (tab_) {
    recursive_lengths(lengths);
    ++attempts_;
    ++accepted_;
    return lengths;
  }
  for (std::uint64_t tries = 0; tries < kRetryCap; ++tries) {
    ++attempts_;
    if (rejection_attempt(lengths)) {
      ++accepted_;
      return lengths;
    }
  }
  throw numeric_error("CycleTypeSampler: rejection retry cap reached");
}

CycleType CycleTypeSampler::sample() {
  const std::vector<std::int64_t> lengths = sample_lengths();
  CycleType ct = CycleType::from_lengths(lengths);
  validate(ct);  // sum m C_m = n, always
  if (ct.n != n_)
    throw numeric_error("CycleTypeSampler: sampled size mismatch");
  return ct;
}

double CycleTypeSampler::acceptance_rate() const {
  if (attempts_ == 0) return 0.0;
  return static_cast<double>(accepted_) / static_cast<double>(attempts_);
}

CycleTypeSampler make_sampler(const SamplerConfig& cfg,
                              const NormalizationTable* tab) {
  if (cfg.method == SampleMethod::kRecursive) {
    if (!tab)
      throw config_error("make_sampler: recursive method needs a table");
    return CycleTypeSampler::recursive(*tab, cfg.n, cfg.seed, cfg.stream);
  }
  return CycleTypeSampler::rejection(PoissonSpec::at_saddle(cfg.gamma, cfg.n),
                                     cfg.seed, cfg.stream);
}

double acceptance_rate_estimate(const PoissonSpec& spec, std::uint64_t seed,
                                std::uint64_t stream, std::int64_t samples) {
  if (samples < 1)
    throw config_error("acceptance_rate_estimate: samples must be >= 1");
  CycleTypeSampler sampler = CycleTypeSampler::rejection(spec, seed, stream);
  for (std::int64_t i = 0; i < samples; ++i) (void)sampler.sample();
  return sampler.acceptance_rate();
}

}  // namespace permlab
