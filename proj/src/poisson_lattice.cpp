#include "permlab/poisson_lattice.hpp"

#include <algorithm>
#include <cmath>

#include "permlab/errors.hpp"
#include "permlab/kernels.hpp"
#include "permlab/special.hpp"

namespace permlab {

namespace {

// thread-safe lgamma (positive arguments only)
double lgamma_pos(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

// Poisson(lambda) pmf values p_0..p_last with p_i >= 1e-18 beyond the mode
// dropped; cum[i] = p_0 + ... + p_i.
struct TruncatedPoisson {
  std::vector<double> pmf;
  std::vector<double> cum;

  // 1 - P[Z <= i], including all truncated mass
  double suffix(std::int64_t i) const {
    if (i < 0) return 1.0;
    const std::size_t idx =
        std::min<std::size_t>(static_cast<std::size_t>(i), cum.size() - 1);
    return std::max(0.0, 1.0 - cum[idx]);
  }
};

TruncatedPoisson truncated_poisson(double lambda) {
  constexpr double mass_cut = 1e-18;
  TruncatedPoisson tp;
  const double log_lambda = std::log(lambda);
  const std::int64_t mode = static_cast<std::int64_t>(lambda);
  double cum = 0.0;
  for (std::int64_t i = 0;; ++i) {
    const double p = std::exp(-lambda + i * log_lambda - lgamma_pos(i + 1.0));
    if (i > mode && p < mass_cut) break;
    tp.pmf.push_back(p);
    cum += p;
    tp.cum.push_back(cum);
  }
  return tp;
}

}  // namespace

double saddle_parameter(double gamma, std::int64_t n) {
  if (!(gamma > 0.0)) throw config_error("saddle_parameter: gamma must be > 0");
  if (n < 1) throw config_error("saddle_parameter: n must be >= 1");
  const double eta =
      std::pow(n / std::tgamma(1.0 + gamma), -1.0 / (1.0 + gamma));
  return std::exp(-eta);
}

PoissonSpec PoissonSpec::at_saddle(double gamma, std::int64_t n) {
  return with_t(WeightSequence::power_law(gamma), n,
                saddle_parameter(gamma, n));
}

PoissonSpec PoissonSpec::with_t(const WeightSequence& w, std::int64_t n,
                                double t) {
  if (n < 1) throw config_error("PoissonSpec: n must be >= 1");
  if (!(t > 0.0 && t < 1.0))
    throw config_error("PoissonSpec: t must be in (0,1)");
  PoissonSpec spec{w, n, t, {}};
  spec.means.assign(n + 1, 0.0);
  const double log_t = std::log(t);
  for (std::int64_t m = 1; m <= n; ++m)
    spec.means[m] =
        std::exp(w.log_theta(m) - std::log(static_cast<double>(m)) + m * log_t);
  return spec;
}

double PoissonSpec::total_mean() const {
  double s = 0.0, c = 0.0;
  for (std::int64_t m = 1; m <= n; ++m) {
    const double y = means[m] - c;
    const double t2 = s + y;
    c = (t2 - s) - y;
    s = t2;
  }
  return s;
}

double LatticeDistribution::total_mass() const {
  double s = overflow;
  for (double p : pmf) s += p;
  return s;
}

double LatticeDistribution::mean_truncated() const {
  double s = 0.0;
  for (std::size_t j = 0; j < pmf.size(); ++j) s += static_cast<double>(j) * pmf[j];
  return s;
}

double LatticeDistribution::variance_truncated() const {
  const double mu = mean_truncated();
  double s = 0.0;
  for (std::size_t j = 0; j < pmf.size(); ++j) {
    const double d = static_cast<double>(j) - mu;
    s += d * d * pmf[j];
  }
  return s;
}

LatticeDistribution lattice_law(const PoissonSpec& spec, std::int64_t ell,
                                std::int64_t k, std::int64_t cap) {
  if (cap < 0) throw config_error("lattice_law: cap must be >= 0");
  if (!(0 <= ell && ell < k && k <= spec.n))
    throw config_error("lattice_law: need 0 <= ell < k <= n");

  LatticeDistribution dist;
  dist.cap = cap;
  dist.pmf.assign(cap + 1, 0.0);
  dist.pmf[0] = 1.0;
  dist.overflow = 0.0;

  std::vector<double> next(cap + 1, 0.0);
  for (std::int64_t m = ell + 1; m <= k; ++m) {
    const TruncatedPoisson tp = truncated_poisson(spec.means[m]);
    std::fill(next.begin(), next.end(), 0.0);
    // value shifts by i*m with weight p_i
    for (std::size_t i = 0; i < tp.pmf.size(); ++i) {
      const std::int64_t shift = static_cast<std::int64_t>(i) * m;
      if (shift > cap) break;
      kernels::axpy(tp.pmf[i], dist.pmf.data(), next.data() + shift,
                    static_cast<std::size_t>(cap + 1 - shift));
    }
    // mass pushed past cap: sum_j pmf[j] * P[Z > (cap - j) / m]
    double spill = 0.0;
    for (std::int64_t j = 0; j <= cap; ++j)
      if (dist.pmf[j] != 0.0) spill += dist.pmf[j] * tp.suffix((cap - j) / m);
    dist.overflow += spill;
    dist.pmf.swap(next);
  }
  return dist;
}

double log_prob_t0n_equals_n(const PoissonSpec& spec,
                             const NormalizationTable& tab) {
  if (spec.n > tab.size())
    throw config_error("log_prob_t0n_equals_n: table smaller than n");
  return spec.n * std::log(spec.t) + tab.log_h(spec.n) - spec.total_mean();
}

double conditioning_identity_check(const PoissonSpec& spec,
                                   const NormalizationTable& tab) {
  const LatticeDistribution law = lattice_law(spec, 0, spec.n, spec.n);
  const double dp = law.pmf[spec.n];
  const double closed = std::exp(log_prob_t0n_equals_n(spec, tab));
  return std::abs(dp / closed - 1.0);
}

double dp_tv_distance(const PoissonSpec& spec, const NormalizationTable& tab,
                      std::int64_t b) {
  const std::int64_t n = spec.n;
  if (b < 1 || b > n) throw config_error("dp_tv_distance: b out of range");

  const double log_p = log_prob_t0n_equals_n(spec, tab);
  if (log_p < -700.0)
    throw numeric_error("dp_tv_distance: P[T_{0n}=n] underflows");
  const double p_cond = std::exp(log_p);

  const LatticeDistribution head = lattice_law(spec, 0, b, n);
  LatticeDistribution tail;
  if (b < n) {
    tail = lattice_law(spec, b, n, n);
  } else {
    // empty segment: point mass at zero
    tail.cap = n;
    tail.pmf.assign(n + 1, 0.0);
    tail.pmf[0] = 1.0;
  }

  double d = head.overflow;
  for (std::int64_t k = 0; k <= n; ++k) {
    const double excess = 1.0 - tail.pmf[n - k] / p_cond;
    if (excess > 0.0) d += head.pmf[k] * excess;
  }
  return std::clamp(d, 0.0, 1.0);
}

MomentSums moment_sums(const PoissonSpec& spec, std::int64_t b) {
  if (b < 0 || b > spec.n) throw config_error("moment_sums: b out of range");
  MomentSums out;
  double comp[6] = {0, 0, 0, 0, 0, 0};
  double* sums[6] = {&out.mu_0b,  &out.var_0b,   &out.mu_bn,
                     &out.var_bn, &out.third_0b, &out.fourth_0b};
  auto add = [&](int which, double v) {
    const double y = v - comp[which];
    const double t = *sums[which] + y;
    comp[which] = (t - *sums[which]) - y;
    *sums[which] = t;
  };
  for (std::int64_t m = 1; m <= spec.n; ++m) {
    const double km = static_cast<double>(m);
    const double theta_t = km * spec.means[m];  // theta_m t^m
    if (m <= b) {
      add(0, theta_t);
      add(1, km * theta_t);
      add(4, km * km * theta_t);
      add(5, km * km * km * theta_t);
    } else {
      add(2, theta_t);
      add(3, km * theta_t);
    }
  }
  return out;
}

GaussianDiagnostic gaussian_diagnostic(const PoissonSpec& spec,
                                       std::int64_t b) {
  if (b < 1 || b > spec.n)
    throw config_error("gaussian_diagnostic: b out of range");
  const MomentSums ms = moment_sums(spec, b);
  const double gamma = spec.gamma();
  const double x = 1.0 + gamma / 3.0;
  const double bx = std::pow(static_cast<double>(b), x);
  const double sigma = std::sqrt(ms.var_0b);

  GaussianDiagnostic diag;
  diag.mu_scaled = ms.mu_0b / bx;
  diag.sigma_scaled = sigma / bx;

  const std::int64_t cap =
      static_cast<std::int64_t>(std::ceil(ms.mu_0b + 40.0 * sigma)) + 8;
  const LatticeDistribution law = lattice_law(spec, 0, b, cap);
  double cdf = 0.0;
  double dk = 0.0;
  for (std::int64_t j = 0; j <= cap; ++j) {
    cdf += law.pmf[j];
    const double z = (j / bx - diag.mu_scaled) / diag.sigma_scaled;
    dk = std::max(dk, std::abs(cdf - normal_cdf(z)));
  }
  diag.d_kolmogorov = dk;
  diag.ratio = dk * std::pow(static_cast<double>(b), gamma / 6.0);
  return diag;
}

}  // namespace permlab
