#include "permlab/weights.hpp"

#include <cmath>
#include <ostream>

#include "permlab/errors.hpp"
#include "permlab/format_util.hpp"
#include "permlab/kernels.hpp"

namespace permlab {

double log_mpq(const mpq_class& q) {
  if (sgn(q) <= 0) throw config_error("log_mpq: value must be positive");
  signed long ne = 0, de = 0;
  const double nd = mpz_get_d_2exp(&ne, q.get_num().get_mpz_t());
  const double dd = mpz_get_d_2exp(&de, q.get_den().get_mpz_t());
  return std::log(nd) - std::log(dd) + M_LN2 * (ne - de);
}

WeightSequence WeightSequence::power_law(double gamma) {
  if (!(gamma > 0.0))
    throw config_error("WeightSequence: gamma must be positive");
  return WeightSequence(Kind::PowerLaw, gamma, 0.0);
}

WeightSequence WeightSequence::uniform() {
  return WeightSequence(Kind::Uniform, 0.0, 0.0);
}

WeightSequence WeightSequence::ewens(double theta) {
  if (!(theta > 0.0))
    throw config_error("WeightSequence: Ewens theta must be positive");
  return WeightSequence(Kind::Ewens, 0.0, theta);
}

double WeightSequence::theta(std::int64_t m) const {
  switch (kind_) {
    case Kind::PowerLaw:
      return std::pow(static_cast<double>(m), gamma_);
    case Kind::Uniform:
      return 1.0;
    case Kind::Ewens:
      return ewens_theta_;
  }
  return 1.0;
}

double WeightSequence::log_theta(std::int64_t m) const {
  switch (kind_) {
    case Kind::PowerLaw:
      return gamma_ * std::log(static_cast<double>(m));
    case Kind::Uniform:
      return 0.0;
    case Kind::Ewens:
      return std::log(ewens_theta_);
  }
  return 0.0;
}

bool WeightSequence::has_exact() const {
  if (kind_ == Kind::PowerLaw)
    return gamma_ == std::floor(gamma_);
  return true;  // both hooks: 1 exactly, or the binary rational theta
}

mpq_class WeightSequence::exact_theta(std::int64_t m) const {
  switch (kind_) {
    case Kind::PowerLaw: {
      if (!has_exact())
        throw config_error(
            "exact_theta: rational path requires integer gamma");
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(m),
                    static_cast<unsigned long>(gamma_));
      return mpq_class(v);
    }
    case Kind::Uniform:
      return mpq_class(1);
    case Kind::Ewens:
      return mpq_class(ewens_theta_);
  }
  return mpq_class(1);
}

NormalizationTable build_normalization_table(const WeightSequence& w,
                                             std::int64_t N,
                                             std::int64_t exact_upto) {
  if (N < 1) throw config_error("build_normalization_table: N must be >= 1");
  if (exact_upto < 0 || exact_upto > N)
    throw config_error("build_normalization_table: exact_upto out of range");
  if (exact_upto > 0 && !w.has_exact())
    throw config_error(
        "build_normalization_table: exact path needs integer gamma or a hook");

  std::vector<double> log_theta(N + 1, 0.0);
  for (std::int64_t m = 1; m <= N; ++m) log_theta[m] = w.log_theta(m);

  std::vector<double> log_h(N + 1, 0.0);  // log h_0 = 0
  for (std::int64_t n = 1; n <= N; ++n) {
    // terms log theta_m + log h_{n-m}, m = 1..n
    const double* f = log_theta.data() + 1;
    const double* r = log_h.data();
    const double mx = kernels::max_fwd_rev(f, r, static_cast<std::size_t>(n));
    const double s =
        kernels::sum_exp_fwd_rev(f, r, static_cast<std::size_t>(n), mx);
    log_h[n] = mx + std::log(s) - std::log(static_cast<double>(n));
  }

  std::vector<mpq_class> exact_h;
  if (exact_upto >= 0) {
    exact_h.reserve(exact_upto + 1);
    exact_h.emplace_back(1);
    std::vector<mpq_class> th;
    th.reserve(exact_upto + 1);
    th.emplace_back(0);
    for (std::int64_t m = 1; m <= exact_upto; ++m)
      th.push_back(w.exact_theta(m));
    for (std::int64_t n = 1; n <= exact_upto; ++n) {
      mpq_class acc(0);
      for (std::int64_t m = 1; m <= n; ++m) acc += th[m] * exact_h[n - m];
      acc /= n;
      acc.canonicalize();
      exact_h.push_back(acc);
    }
  }

  return NormalizationTable(w, std::move(log_h), std::move(exact_h),
                            std::move(log_theta));
}

std::vector<double> first_cycle_length_law(const NormalizationTable& tab,
                                           std::int64_t n) {
  if (n < 1 || n > tab.size())
    throw config_error("first_cycle_length_law: n out of table range");
  std::vector<double> p(n);
  const double base = tab.log_h(n) + std::log(static_cast<double>(n));
  for (std::int64_t m = 1; m <= n; ++m)
    p[m - 1] = std::exp(tab.log_theta(m) + tab.log_h(n - m) - base);
  return p;
}

double factorial_moment(const NormalizationTable& tab, std::int64_t n,
                        std::int64_t m, std::int64_t k) {
  if (n < 1 || n > tab.size() || m < 1 || k < 1)
    throw config_error("factorial_moment: bad arguments");
  if (m * k > n) return 0.0;
  return std::exp(k * (tab.log_theta(m) - std::log(static_cast<double>(m))) +
                  tab.log_h(n - m * k) - tab.log_h(n));
}

mpq_class factorial_moment_exact(const NormalizationTable& tab, std::int64_t n,
                                 std::int64_t m, std::int64_t k) {
  if (n < 1 || n > tab.exact_upto() || m < 1 || k < 1)
    throw config_error("factorial_moment_exact: outside exact range");
  if (m * k > n) return mpq_class(0);
  mpq_class ratio = tab.weights().exact_theta(m) / mpq_class(m);
  mpq_class acc(1);
  for (std::int64_t i = 0; i < k; ++i) acc *= ratio;
  acc *= tab.exact_h(n - m * k);
  acc /= tab.exact_h(n);
  acc.canonicalize();
  return acc;
}

double mixed_moment(const NormalizationTable& tab, std::int64_t n,
                    std::int64_t m1, std::int64_t m2) {
  if (m1 == m2)
    throw config_error("mixed_moment: m1 = m2, use factorial_moment");
  if (n < 1 || n > tab.size() || m1 < 1 || m2 < 1)
    throw config_error("mixed_moment: bad arguments");
  if (m1 + m2 > n) return 0.0;
  return std::exp(tab.log_theta(m1) - std::log(static_cast<double>(m1)) +
                  tab.log_theta(m2) - std::log(static_cast<double>(m2)) +
                  tab.log_h(n - m1 - m2) - tab.log_h(n));
}

mpq_class mixed_moment_exact(const NormalizationTable& tab, std::int64_t n,
                             std::int64_t m1, std::int64_t m2) {
  if (m1 == m2)
    throw config_error("mixed_moment_exact: m1 = m2, use factorial_moment");
  if (n < 1 || n > tab.exact_upto() || m1 < 1 || m2 < 1)
    throw config_error("mixed_moment_exact: outside exact range");
  if (m1 + m2 > n) return mpq_class(0);
  mpq_class acc = tab.weights().exact_theta(m1) / mpq_class(m1);
  acc *= tab.weights().exact_theta(m2) / mpq_class(m2);
  acc *= tab.exact_h(n - m1 - m2);
  acc /= tab.exact_h(n);
  acc.canonicalize();
  return acc;
}

void export_table_csv(const NormalizationTable& tab, std::ostream& os) {
  os << "n,log_h_n,h_n_exact\n";
  for (std::int64_t n = 0; n <= tab.size(); ++n) {
    os << n << ',' << fmt_double(tab.log_h(n)) << ',';
    if (n <= tab.exact_upto()) os << tab.exact_h(n);
    os << '\n';
  }
}

}  // namespace permlab
