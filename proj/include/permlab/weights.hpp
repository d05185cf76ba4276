#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

// The cycle-weighted measure on S_n: P[sigma] = (1/(h_n n!)) prod theta_m^{C_m}
// with theta_m = m^gamma. The uniform (theta = 1) and Ewens (theta constant)
// weights are kept as test hooks; the CLI only exposes the power law.

namespace permlab {

// log of a positive rational, safe for values far outside double range
double log_mpq(const mpq_class& q);

class WeightSequence {
 public:
  enum class Kind { PowerLaw, Uniform, Ewens };

  static WeightSequence power_law(double gamma);
  static WeightSequence uniform();             // theta_m = 1 (test hook)
  static WeightSequence ewens(double theta);   // theta_m = theta (test hook)

  Kind kind() const { return kind_; }
  // power-law exponent; 0 for the uniform hook
  double gamma() const { return gamma_; }

  double theta(std::int64_t m) const;
  double log_theta(std::int64_t m) const;

  // Exact rational theta_m: available for integer-gamma power laws and for
  // both hooks (a double Ewens theta is a binary rational, hence exact).
  bool has_exact() const;
  mpq_class exact_theta(std::int64_t m) const;

 private:
  WeightSequence(Kind k, double g, double ewens_theta)
      : kind_(k), gamma_(g), ewens_theta_(ewens_theta) {}
  Kind kind_;
  double gamma_;
  double ewens_theta_;
};

// h_0..h_N in log space, plus exact rationals for the low-index prefix.
// Immutable after construction; safe to share across threads.
class NormalizationTable {
 public:
  NormalizationTable(WeightSequence w, std::vector<double> log_h,
                     std::vector<mpq_class> exact_h,
                     std::vector<double> log_theta)
      : w_(w),
        log_h_(std::move(log_h)),
        exact_h_(std::move(exact_h)),
        log_theta_(std::move(log_theta)) {}

  const WeightSequence& weights() const { return w_; }
  double gamma() const { return w_.gamma(); }
  std::int64_t size() const {
    return static_cast<std::int64_t>(log_h_.size()) - 1;
  }

  double log_h(std::int64_t n) const { return log_h_[n]; }
  const std::vector<double>& log_h() const { return log_h_; }
  double log_theta(std::int64_t m) const { return log_theta_[m]; }

  std::int64_t exact_upto() const {
    return static_cast<std::int64_t>(exact_h_.size()) - 1;
  }
  const mpq_class& exact_h(std::int64_t n) const { return exact_h_[n]; }

 private:
  WeightSequence w_;
  std::vector<double> log_h_;
  std::vector<mpq_class> exact_h_;  // empty or indices 0..exact_upto
  std::vector<double> log_theta_;   // index 0 unused
};

// Builds h_n by the recurrence n h_n = sum_{m=1..n} theta_m h_{n-m}, obtained
// by differentiating sum h_n t^n = exp(g_Theta(t)). Log-space with
// log-sum-exp accumulation; rationals up to exact_upto on request.
NormalizationTable build_normalization_table(const WeightSequence& w,
                                             std::int64_t N,
                                             std::int64_t exact_upto = 0);

// P[cycle containing a fixed element has length m] = theta_m h_{n-m} / (n h_n),
// returned as p[m-1] for m = 1..n.
std::vector<double> first_cycle_length_law(const NormalizationTable& tab,
                                           std::int64_t n);

// E[(C_m)_k] = (theta_m/m)^k h_{n-mk}/h_n; 0 when mk > n.
double factorial_moment(const NormalizationTable& tab, std::int64_t n,
                        std::int64_t m, std::int64_t k);
mpq_class factorial_moment_exact(const NormalizationTable& tab, std::int64_t n,
                                 std::int64_t m, std::int64_t k);

// E[C_{m1} C_{m2}] = (theta_{m1}/m1)(theta_{m2}/m2) h_{n-m1-m2}/h_n for
// m1 != m2; 0 when m1+m2 > n.
double mixed_moment(const NormalizationTable& tab, std::int64_t n,
                    std::int64_t m1, std::int64_t m2);
mpq_class mixed_moment_exact(const NormalizationTable& tab, std::int64_t n,
                             std::int64_t m1, std::int64_t m2);

// CSV with columns n, log_h_n, h_n_exact (exact column empty when unavailable)
void export_table_csv(const NormalizationTable& tab, std::ostream& os);

}  // namespace permlab
