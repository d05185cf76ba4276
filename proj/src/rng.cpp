#include "permlab/rng.hpp"

#include <cmath>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

double lgamma_pos(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

std::int64_t poisson_inversion(Philox& rng, double lambda) {
  const double u = rng.next_double();
  double p = std::exp(-lambda);
  double cdf = p;
  std::int64_t k = 0;
  while (u > cdf) {
    ++k;
    p *= lambda / static_cast<double>(k);
    cdf += p;
    if (k > 2000)
      throw numeric_error("poisson_draw: inversion ran away");
  }
  return k;
}

// Hormann (1993), "The transformed rejection method for generating Poisson
// random variables", algorithm PTRD.
std::int64_t poisson_ptrd(Philox& rng, double lambda) {
  const double smu = std::sqrt(lambda);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double log_lambda = std::log(lambda);

  for (int tries = 0; tries < 10000; ++tries) {
    double v = rng.next_double();
    if (v <= 0.86 * vr) {
      const double u = v / vr - 0.43;
      return static_cast<std::int64_t>(
          std::floor((2.0 * a / (0.5 - std::abs(u)) + b) * u + lambda + 0.445));
    }
    double u;
    if (v >= vr) {
      u = rng.next_double() - 0.5;
    } else {
      u = v / vr - 0.93;
      u = (u < 0.0 ? -0.5 : 0.5) - u;
      v = rng.next_double() * vr;
    }
    const double us = 0.5 - std::abs(u);
    if (us < 0.013 && v > us) continue;
    const double k =
        std::floor((2.0 * a / us + b) * u + lambda + 0.445);
    v = v * inv_alpha / (a / (us * us) + b);
    if (k >= 10.0) {
      if (std::log(v * smu) <=
          (k + 0.5) * std::log(lambda / k) - lambda -
              std::log(std::sqrt(2.0 * M_PI)) + k -
              (1.0 / 12.0 - 1.0 / (360.0 * k * k)) / k)
        return static_cast<std::int64_t>(k);
    } else if (k >= 0.0) {
      if (std::log(v) <= k * log_lambda - lambda - lgamma_pos(k + 1.0))
        return static_cast<std::int64_t>(k);
    }
  }
  throw numeric_error("poisson_draw: PTRD did not accept");
}

}  // namespace

std::int64_t poisson_draw(Philox& rng, double lambda) {
  if (!(lambda > 0.0)) {
    if (lambda == 0.0) return 0;
    throw config_error("poisson_draw: lambda must be >= 0");
  }
  if (lambda < 10.0) return poisson_inversion(rng, lambda);
  return poisson_ptrd(rng, lambda);
}

}  // namespace permlab
