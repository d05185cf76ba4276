#include "permlab/kernels.hpp"

#include <cstdlib>

namespace permlab::kernels {

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
double max_fwd_rev(const double* f, const double* r, std::size_t n);
double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift);
}  // namespace avx2
#endif

#if defined(__aarch64__) && defined(__ARM_NEON)
namespace neon {
void axpy(double a, const double* x, double* y, std::size_t n);
double max_fwd_rev(const double* f, const double* r, std::size_t n);
double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift);
}  // namespace neon
#endif

namespace {

struct Vtable {
  const char* name;
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*max_fwd_rev)(const double*, const double*, std::size_t);
  double (*sum_exp_fwd_rev)(const double*, const double*, std::size_t, double);
};

Vtable pick() {
  const char* env = std::getenv("PERMLAB_NO_SIMD");
  const bool forced_scalar = env && env[0] == '1';
  if (!forced_scalar) {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return {"avx2", &avx2::axpy, &avx2::max_fwd_rev, &avx2::sum_exp_fwd_rev};
#endif
#if defined(__aarch64__) && defined(__ARM_NEON)
    return {"neon", &neon::axpy, &neon::max_fwd_rev, &neon::sum_exp_fwd_rev};
#endif
  }
  return {"scalar", &scalar::axpy, &scalar::max_fwd_rev,
          &scalar::sum_exp_fwd_rev};
}

const Vtable& table() {
  static const Vtable t = pick();
  return t;
}

}  // namespace

const char* backend() { return table().name; }

void axpy(double a, const double* x, double* y, std::size_t n) {
  table().axpy(a, x, y, n);
}

double max_fwd_rev(const double* f, const double* r, std::size_t n) {
  return table().max_fwd_rev(f, r, n);
}

double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift) {
  return table().sum_exp_fwd_rev(f, r, n, shift);
}

}  // namespace permlab::kernels
