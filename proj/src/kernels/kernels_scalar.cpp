#include "permlab/kernels.hpp"

#include <cmath>
#include <limits>

namespace permlab::kernels::scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double max_fwd_rev(const double* f, const double* r, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f[i] + r[n - 1 - i];
    if (v > m) m = v;
  }
  return m;
}

double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += std::exp(f[i] + r[n - 1 - i] - shift);
  return s;
}

}  // namespace permlab::kernels::scalar
