#include "permlab/special.hpp"

#include <cmath>
#include <limits>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

// thread-safe lgamma for positive arguments
double lgamma_pos(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

}  // namespace

// ---------------------------------------------------------------------------
// MangoldtSieve
// ---------------------------------------------------------------------------

MangoldtSieve::MangoldtSieve(std::int64_t N) : N_(N) {
  if (N < 1) throw config_error("MangoldtSieve: N must be >= 1");
  lambda_.assign(N + 1, 0.0);
  psi_.assign(N + 1, 0.0);
  spf_.assign(N + 1, 0);
  pp_base_.assign(N + 1, 0);
  if (N >= 1) spf_[1] = 1;
  for (std::int64_t i = 2; i <= N; ++i) {
    if (spf_[i] == 0) {
      primes_.push_back(i);
      for (std::int64_t j = i; j <= N; j += i)
        if (spf_[j] == 0) spf_[j] = static_cast<std::int32_t>(i);
    }
  }
  for (std::int64_t p : primes_) {
    const double logp = std::log(static_cast<double>(p));
    std::int64_t q = p;
    int k = 1;
    while (q <= N) {
      pp_base_[q] = static_cast<std::int32_t>(p);
      lambda_[q] = logp;
      prime_powers_.push_back({q, p, k});
      if (q > N / p) break;
      q *= p;
      ++k;
    }
  }
  double acc = 0.0;
  for (std::int64_t k = 1; k <= N; ++k) {
    acc += lambda_[k];
    psi_[k] = acc;
  }
}

MangoldtSieve build_mangoldt_sieve(std::int64_t N) { return MangoldtSieve(N); }

// ---------------------------------------------------------------------------
// polylogarithm
// ---------------------------------------------------------------------------

double polylog(double a, double t) {
  if (!(t > 0.0 && t < 1.0)) throw config_error("polylog: t must be in (0,1)");
  constexpr double eps_rel = 1e-13;
  constexpr std::int64_t term_cap = 100'000'000;
  // for a < 0 the terms grow until k ~ -a / (-log t)
  const std::int64_t k_min =
      a < 0.0 ? static_cast<std::int64_t>(-a / (-std::log(t))) + 1 : 1;
  double sum = 0.0;
  double tk = 1.0;
  for (std::int64_t k = 1; k <= term_cap; ++k) {
    tk *= t;
    const double term = tk * std::pow(static_cast<double>(k), -a);
    sum += term;
    if (k >= k_min && term < eps_rel * sum) return sum;
  }
  throw numeric_error("polylog: series did not converge within term cap");
}

PolylogDiagnostic polylog_near_one(double a, double t) {
  if (a >= 1.0)
    throw config_error("polylog_near_one: expansion requires a < 1");
  const double series = polylog(a, t);
  const double expansion =
      std::tgamma(1.0 - a) * std::pow(-std::log(t), a - 1.0) + riemann_zeta(a);
  return {series, expansion, std::abs(series - expansion) / std::abs(series)};
}

// ---------------------------------------------------------------------------
// incomplete gamma
// ---------------------------------------------------------------------------

namespace {

// regularized lower series: P(a,y) * Gamma(a), for y < a + 1
double lower_gamma_series(double a, double y) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= y / (a + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16)
      return sum * std::exp(-y + a * std::log(y));
  }
  throw numeric_error("incomplete gamma: series did not converge");
}

// continued fraction (modified Lentz), for y >= a + 1
double upper_gamma_cf(double a, double y) {
  constexpr double fpmin = 1e-300;
  double b = y + 1.0 - a;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16)
      return h * std::exp(-y + a * std::log(y));
  }
  throw numeric_error("incomplete gamma: continued fraction did not converge");
}

}  // namespace

double upper_incomplete_gamma(double a, double y) {
  if (y < 0.0) throw config_error("upper_incomplete_gamma: y must be >= 0");
  if (a <= 0.0) {
    if (y <= 0.0)
      throw config_error("upper_incomplete_gamma: a <= 0 requires y > 0");
    // walk down from a positive parameter: Gamma(a,y) =
    // (Gamma(a+1,y) - y^a e^{-y}) / a
    const int shift = static_cast<int>(std::floor(-a)) + 1;
    double g = upper_incomplete_gamma(a + shift, y);
    for (int i = shift - 1; i >= 0; --i) {
      const double ai = a + i;
      g = (g - std::exp(-y + ai * std::log(y))) / ai;
    }
    return g;
  }
  if (y == 0.0) return std::tgamma(a);
  // switchover at y* = a + 1
  if (y < a + 1.0) return std::tgamma(a) - lower_gamma_series(a, y);
  return upper_gamma_cf(a, y);
}

// ---------------------------------------------------------------------------
// Sigma_j tail series
// ---------------------------------------------------------------------------

double sigma_series(int j, double a, double y) {
  if (j < 2) throw config_error("sigma_series: j must be >= 2");
  if (y < 0.0) throw config_error("sigma_series: y must be >= 0");
  if (y == 0.0) return 0.0;
  // w = y^{k-1} / (k-1)!, accumulated in long double; the common factor y^a
  // is applied per term
  const long double ya = std::pow(static_cast<long double>(y),
                                  static_cast<long double>(a));
  long double w = 1.0L;
  for (int k = 2; k < j; ++k) w *= y / (k - 1);
  long double sum = 0.0L;
  for (int k = j; k < 100000; ++k) {
    w *= y / (k - 1);
    // at this point w = y^{k-1} / (k-1)!
    const double denom = (k - 1) + a;
    if (std::abs(denom) < 1e-12)
      throw numeric_error("sigma_series: pole in denominator at k=" +
                          std::to_string(k));
    const long double term = ((k % 2 == 0) ? 1.0L : -1.0L) * w * ya / denom;
    sum += term;
    if (std::abs(static_cast<double>(term)) < 1e-15 && k > y + 2)
      return static_cast<double>(sum);
  }
  throw numeric_error("sigma_series: did not converge");
}

// ---------------------------------------------------------------------------
// erf / digamma / zeta
// ---------------------------------------------------------------------------

double erf(double x) { return std::erf(x); }

double digamma(double x) {
  if (x <= 0.0) throw config_error("digamma: requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // asymptotic series with Bernoulli coefficients
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = std::log(x) - 0.5 * inv;
  s -= inv2 * (1.0 / 12.0 -
               inv2 * (1.0 / 120.0 -
                       inv2 * (1.0 / 252.0 -
                               inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
  return acc + s;
}

namespace {

// Borwein's globally convergent alternating series, good for s >= 1/2
double zeta_borwein(double s) {
  constexpr int n = 50;
  // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  double d[n + 1];
  double term = 1.0;  // i = 0 summand: (n-1)!/n! * n = 1 after the n factor
  double acc = 1.0;
  d[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    // ratio of summand i to summand i-1
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    acc += term;
    d[i] = acc;
  }
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double piece =
        (d[k] - d[n]) * std::pow(static_cast<double>(k + 1), -s);
    sum += (k % 2 == 0) ? piece : -piece;
  }
  return -sum / (d[n] * (1.0 - std::pow(2.0, 1.0 - s)));
}

}  // namespace

double riemann_zeta(double s) {
  if (s == 1.0) throw config_error("riemann_zeta: pole at s = 1");
  if (s >= 0.5) return zeta_borwein(s);
  if (s == 0.0) return -0.5;
  // functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  const double refl = zeta_borwein(1.0 - s);
  return std::pow(2.0, s) * std::pow(M_PI, s - 1.0) *
         std::sin(M_PI * s / 2.0) * std::tgamma(1.0 - s) * refl;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

}  // namespace permlab
