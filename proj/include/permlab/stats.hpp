#pragma once

#include <cstdint>
#include <vector>

// Test statistics for the experiment runner: exact one-sample KS distance
// against a normal (sorted sample vs Phi, no binning), and chi-square
// goodness-of-fit / two-sample tests with small-cell pooling.

namespace permlab {

// sup_x |F_hat(x) - Phi((x - mean)/sd)| from the exact one-sample statistic
double ks_distance_to_normal(std::vector<double> sample, double mean = 0.0,
                             double sd = 1.0);

struct ChiSquareResult {
  double statistic = 0.0;
  std::int64_t dof = 0;
  double p_value = 0.0;
};

// observed counts vs expected counts; cells with expected < min_expected are
// pooled into one bucket
ChiSquareResult chi_square_gof(const std::vector<std::int64_t>& observed,
                               const std::vector<double>& expected,
                               double min_expected = 5.0);

// homogeneity test of two samples over the same cells (pooled expectations,
// dof = pooled_cells - 1)
ChiSquareResult chi_square_two_sample(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b,
                                      double min_expected = 5.0);

struct MeanVar {
  double mean = 0.0;
  double var = 0.0;       // unbiased sample variance
  double se_mean = 0.0;   // sd / sqrt(n)
};
MeanVar mean_var(const std::vector<double>& sample);

// sample covariance plus the standard error of the covariance estimate
struct CovEstimate {
  double cov = 0.0;
  double se = 0.0;
};
CovEstimate covariance(const std::vector<double>& x,
                       const std::vector<double>& y);

}  // namespace permlab
