#include "permlab/stats.hpp"

#include <algorithm>
#include <cmath>

#include "permlab/errors.hpp"
#include "permlab/special.hpp"

namespace permlab {

double ks_distance_to_normal(std::vector<double> sample, double mean,
                             double sd) {
  if (sample.empty()) throw config_error("ks_distance_to_normal: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = normal_cdf((sample[i] - mean) / sd);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

namespace {

// pool trailing small cells together; returns (observed, expected) pairs
struct Pooled {
  std::vector<double> obs;
  std::vector<double> exp;
};

Pooled pool_cells(const std::vector<double>& obs, const std::vector<double>& exp,
                  double min_expected) {
  Pooled out;
  double pool_obs = 0.0, pool_exp = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (exp[i] >= min_expected) {
      out.obs.push_back(obs[i]);
      out.exp.push_back(exp[i]);
    } else {
      pool_obs += obs[i];
      pool_exp += exp[i];
    }
  }
  if (pool_exp > 0.0) {
    out.obs.push_back(pool_obs);
    out.exp.push_back(pool_exp);
  }
  return out;
}

double chi_square_p_value(double stat, std::int64_t dof) {
  if (dof <= 0) return 1.0;
  // survival function Q(dof/2, stat/2)
  const double a = 0.5 * static_cast<double>(dof);
  return upper_incomplete_gamma(a, 0.5 * stat) / std::tgamma(a);
}

}  // namespace

ChiSquareResult chi_square_gof(const std::vector<std::int64_t>& observed,
                               const std::vector<double>& expected,
                               double min_expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw config_error("chi_square_gof: size mismatch");
  std::vector<double> obs(observed.begin(), observed.end());
  const Pooled pooled = pool_cells(obs, expected, min_expected);
  ChiSquareResult res;
  for (std::size_t i = 0; i < pooled.obs.size(); ++i) {
    const double d = pooled.obs[i] - pooled.exp[i];
    res.statistic += d * d / pooled.exp[i];
  }
  res.dof = static_cast<std::int64_t>(pooled.obs.size()) - 1;
  res.p_value = chi_square_p_value(res.statistic, res.dof);
  return res;
}

ChiSquareResult chi_square_two_sample(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b,
                                      double min_expected) {
  if (a.size() != b.size() || a.empty())
    throw config_error("chi_square_two_sample: size mismatch");
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]);
  }
  const double total = na + nb;
  // pool by the pooled-proportion expectation of the smaller sample
  std::vector<std::size_t> keep, pooled_idx;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double p = (a[i] + b[i]) / total;
    if (p * std::min(na, nb) >= min_expected)
      keep.push_back(i);
    else
      pooled_idx.push_back(i);
  }
  std::vector<double> oa, ob;
  for (std::size_t i : keep) {
    oa.push_back(static_cast<double>(a[i]));
    ob.push_back(static_cast<double>(b[i]));
  }
  if (!pooled_idx.empty()) {
    double sa = 0.0, sb = 0.0;
    for (std::size_t i : pooled_idx) {
      sa += static_cast<double>(a[i]);
      sb += static_cast<double>(b[i]);
    }
    oa.push_back(sa);
    ob.push_back(sb);
  }
  ChiSquareResult res;
  for (std::size_t i = 0; i < oa.size(); ++i) {
    const double row = oa[i] + ob[i];
    if (row == 0.0) continue;
    const double ea = row * na / total;
    const double eb = row * nb / total;
    res.statistic += (oa[i] - ea) * (oa[i] - ea) / ea;
    res.statistic += (ob[i] - eb) * (ob[i] - eb) / eb;
  }
  res.dof = static_cast<std::int64_t>(oa.size()) - 1;
  res.p_value = chi_square_p_value(res.statistic, res.dof);
  return res;
}

MeanVar mean_var(const std::vector<double>& sample) {
  if (sample.size() < 2) throw config_error("mean_var: need >= 2 values");
  const double n = static_cast<double>(sample.size());
  double s = 0.0, c = 0.0;
  for (double v : sample) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  const double mean = s / n;
  double ss = 0.0;
  for (double v : sample) ss += (v - mean) * (v - mean);
  MeanVar out;
  out.mean = mean;
  out.var = ss / (n - 1.0);
  out.se_mean = std::sqrt(out.var / n);
  return out;
}

CovEstimate covariance(const std::vector<double>& x,
                       const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw config_error("covariance: need matched samples of size >= 2");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  // products and their spread give the delta-method standard error
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = (x[i] - mx) * (y[i] - my);
    sum += p;
    sumsq += p * p;
  }
  CovEstimate out;
  out.cov = sum / (n - 1.0);
  const double var_p = (sumsq - sum * sum / n) / (n - 1.0);
  out.se = std::sqrt(var_p / n);
  return out;
}

}  // namespace permlab
