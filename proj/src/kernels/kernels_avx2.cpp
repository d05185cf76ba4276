// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered through the dispatcher after a cpuid check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <limits>

namespace permlab::kernels::avx2 {

namespace {

// Cephes-style exp on 4 lanes: split x = k*ln2 + r, evaluate the rational
// approximation exp(r) = 1 + 2r*P(r^2)/(Q(r^2) - r*P(r^2)), scale by 2^k
// through the exponent bits. Max error ~2 ulp. Inputs below -708 flush to 0,
// which is the only out-of-range case the callers produce (arguments are
// already shifted so that max = 0).
inline __m256d exp4(__m256d x) {
  const __m256d lo_cut = _mm256_set1_pd(-708.0);
  __m256d xc = _mm256_max_pd(x, lo_cut);

  const __m256d log2e = _mm256_set1_pd(1.44269504088896340736);
  __m256d kd = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                               _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  // r = x - k*ln2, with ln2 split in two for extra precision
  __m256d r = _mm256_fnmadd_pd(kd, _mm256_set1_pd(6.93145751953125e-1), xc);
  r = _mm256_fnmadd_pd(kd, _mm256_set1_pd(1.42860682030941723212e-6), r);
  __m256d rr = _mm256_mul_pd(r, r);

  __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
  p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(3.02994407707441961300e-2));
  p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(9.99999999999999999910e-1));
  p = _mm256_mul_pd(p, r);

  __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.52448340349684104192e-3));
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.27265548208155028766e-1));
  q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.0));

  __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

  // scale by 2^k; k in [-1022, 1024] after the clamp
  __m128i k32 = _mm256_cvtpd_epi32(kd);
  __m256i k64 = _mm256_cvtepi32_epi64(k32);
  k64 = _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
  e = _mm256_mul_pd(e, _mm256_castsi256_pd(k64));

  // flush the clamped lanes to zero
  __m256d under = _mm256_cmp_pd(x, lo_cut, _CMP_LT_OQ);
  return _mm256_andnot_pd(under, e);
}

// reverse the four lanes of v
inline __m256d rev4(__m256d v) { return _mm256_permute4x64_pd(v, 0x1B); }

}  // namespace

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d yv = _mm256_loadu_pd(y + i);
    // mul+add (not fused) so results match the scalar reference bit-for-bit
    yv = _mm256_add_pd(yv, _mm256_mul_pd(av, xv));
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double max_fwd_rev(const double* f, const double* r, std::size_t n) {
  __m256d mv = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d fv = _mm256_loadu_pd(f + i);
    __m256d rv = rev4(_mm256_loadu_pd(r + (n - 4 - i)));
    mv = _mm256_max_pd(mv, _mm256_add_pd(fv, rv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, mv);
  double m = lanes[0];
  for (int k = 1; k < 4; ++k)
    if (lanes[k] > m) m = lanes[k];
  for (; i < n; ++i) {
    const double v = f[i] + r[n - 1 - i];
    if (v > m) m = v;
  }
  return m;
}

double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift) {
  const __m256d sh = _mm256_set1_pd(shift);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d fv = _mm256_loadu_pd(f + i);
    __m256d rv = rev4(_mm256_loadu_pd(r + (n - 4 - i)));
    acc = _mm256_add_pd(acc, exp4(_mm256_sub_pd(_mm256_add_pd(fv, rv), sh)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += std::exp(f[i] + r[n - 1 - i] - shift);
  return s;
}

}  // namespace permlab::kernels::avx2

#endif  // x86-64
