#pragma once

#include <cstddef>

// Data-parallel inner loops used by the normalization-table recurrence and
// the lattice convolution. Every kernel has a scalar reference implementation
// in kernels::scalar and a vectorized variant selected once at startup
// (AVX2+FMA on x86-64, NEON on aarch64, scalar otherwise). Setting the
// environment variable PERMLAB_NO_SIMD=1 forces the scalar path.
//
// The vector variants are equivalence-tested against the scalar reference:
// axpy is bit-identical (no FMA contraction in the accumulate), the exp-sum
// kernels agree to a few ulp per element.

namespace permlab::kernels {

// Name of the backend the dispatcher picked: "avx2", "neon" or "scalar".
const char* backend();

// y[i] += a * x[i] for i in [0, n)
void axpy(double a, const double* x, double* y, std::size_t n);

// max over i in [0, n) of f[i] + r[n-1-i]
double max_fwd_rev(const double* f, const double* r, std::size_t n);

// sum over i in [0, n) of exp(f[i] + r[n-1-i] - shift)
double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift);

namespace scalar {
void axpy(double a, const double* x, double* y, std::size_t n);
double max_fwd_rev(const double* f, const double* r, std::size_t n);
double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift);
}  // namespace scalar

}  // namespace permlab::kernels
