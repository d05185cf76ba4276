#pragma once

#include <cstdint>
#include <vector>

// Numeric kernels shared by the whole library: polylogarithm, upper
// incomplete gamma with its small/large-argument expansions, the alternating
// tail series Sigma_j, erf, digamma, Riemann zeta, and the von Mangoldt sieve
// with the Chebyshev psi function.

namespace permlab {

// ---------------------------------------------------------------------------
// von Mangoldt / prime machinery
// ---------------------------------------------------------------------------

struct PrimePower {
  std::int64_t q;  // q = p^k
  std::int64_t p;
  int k;
};

// Exact prime-power bookkeeping up to N. Lambda(q) = log p when q = p^k,
// psi(k) = sum_{j<=k} Lambda(j). Classification is integer-only; the sieve
// also keeps a smallest-prime-factor table for fast factorization.
class MangoldtSieve {
 public:
  explicit MangoldtSieve(std::int64_t N);

  std::int64_t size() const { return N_; }
  double lambda(std::int64_t k) const { return lambda_[k]; }
  double psi(std::int64_t k) const { return psi_[k]; }
  bool is_prime_power(std::int64_t k) const { return pp_base_[k] != 0; }
  // the prime p with k = p^j, or 0 when k is not a prime power
  std::int64_t prime_power_base(std::int64_t k) const { return pp_base_[k]; }
  std::int64_t smallest_prime_factor(std::int64_t k) const { return spf_[k]; }

  const std::vector<PrimePower>& prime_powers() const { return prime_powers_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }

 private:
  std::int64_t N_;
  std::vector<double> lambda_;
  std::vector<double> psi_;
  std::vector<std::int32_t> spf_;
  std::vector<std::int32_t> pp_base_;
  std::vector<PrimePower> prime_powers_;
  std::vector<std::int64_t> primes_;
};

MangoldtSieve build_mangoldt_sieve(std::int64_t N);

// ---------------------------------------------------------------------------
// special functions
// ---------------------------------------------------------------------------

// Li_a(t) = sum_{k>=1} t^k / k^a by direct summation, relative cutoff 1e-13.
// Throws numeric_error if 1e8 terms do not reach the cutoff.
double polylog(double a, double t);

// For t close to 1 the direct series is cross-validated against the expansion
// Li_a(t) ~ Gamma(1-a) (-log t)^{a-1} + zeta(a)  (valid for a < 1).
struct PolylogDiagnostic {
  double series;     // direct summation
  double expansion;  // Gamma(1-a)(-log t)^{a-1} + zeta(a)
  double rel_gap;    // |series - expansion| / |series|
};
PolylogDiagnostic polylog_near_one(double a, double t);

// Gamma(a, y) = int_y^inf x^{a-1} e^{-x} dx. Series below the switchover
// y* = a + 1, continued fraction above. a <= 0 requires y > 0.
double upper_incomplete_gamma(double a, double y);

// Sigma_j(a, y) = sum_{k>=j} (-1)^k y^{k-1+a} / ((k-1)! (k-1+a)),
// summed to 1e-14 absolute. Throws on a vanishing denominator.
double sigma_series(int j, double a, double y);

double erf(double x);

// digamma(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// Riemann zeta for real s != 1, globally convergent alternating series
// (Borwein) plus the functional equation for s < 1/2.
double riemann_zeta(double s);

// Phi(x), the standard normal CDF, used by the KS statistics.
double normal_cdf(double x);

}  // namespace permlab
