// NEON variants for aarch64. Same polynomial scheme as the AVX2 path; the
// dispatcher selects this backend unconditionally on aarch64 (NEON is part of
// the base ISA there).

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>
#include <limits>

namespace permlab::kernels::neon {

namespace {

inline float64x2_t exp2lanes(float64x2_t x) {
  const float64x2_t lo_cut = vdupq_n_f64(-708.0);
  float64x2_t xc = vmaxq_f64(x, lo_cut);

  float64x2_t kd = vrndnq_f64(vmulq_f64(xc, vdupq_n_f64(1.44269504088896340736)));
  float64x2_t r = vfmsq_f64(xc, kd, vdupq_n_f64(6.93145751953125e-1));
  r = vfmsq_f64(r, kd, vdupq_n_f64(1.42860682030941723212e-6));
  float64x2_t rr = vmulq_f64(r, r);

  float64x2_t p = vdupq_n_f64(1.26177193074810590878e-4);
  p = vfmaq_f64(vdupq_n_f64(3.02994407707441961300e-2), p, rr);
  p = vfmaq_f64(vdupq_n_f64(9.99999999999999999910e-1), p, rr);
  p = vmulq_f64(p, r);

  float64x2_t q = vdupq_n_f64(3.00198505138664455042e-6);
  q = vfmaq_f64(vdupq_n_f64(2.52448340349684104192e-3), q, rr);
  q = vfmaq_f64(vdupq_n_f64(2.27265548208155028766e-1), q, rr);
  q = vfmaq_f64(vdupq_n_f64(2.0), q, rr);

  float64x2_t e = vdivq_f64(p, vsubq_f64(q, p));
  e = vfmaq_f64(vdupq_n_f64(1.0), vdupq_n_f64(2.0), e);

  int64x2_t k64 = vcvtnq_s64_f64(kd);
  k64 = vshlq_n_s64(vaddq_s64(k64, vdupq_n_s64(1023)), 52);
  e = vmulq_f64(e, vreinterpretq_f64_s64(k64));

  uint64x2_t under = vcltq_f64(x, lo_cut);
  return vbslq_f64(under, vdupq_n_f64(0.0), e);
}

inline float64x2_t rev2(float64x2_t v) { return vextq_f64(v, v, 1); }

}  // namespace

void axpy(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t xv = vld1q_f64(x + i);
    float64x2_t yv = vld1q_f64(y + i);
    yv = vaddq_f64(yv, vmulq_f64(av, xv));
    vst1q_f64(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double max_fwd_rev(const double* f, const double* r, std::size_t n) {
  float64x2_t mv = vdupq_n_f64(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t fv = vld1q_f64(f + i);
    float64x2_t rv = rev2(vld1q_f64(r + (n - 2 - i)));
    mv = vmaxq_f64(mv, vaddq_f64(fv, rv));
  }
  double m = vgetq_lane_f64(mv, 0);
  if (vgetq_lane_f64(mv, 1) > m) m = vgetq_lane_f64(mv, 1);
  for (; i < n; ++i) {
    const double v = f[i] + r[n - 1 - i];
    if (v > m) m = v;
  }
  return m;
}

double sum_exp_fwd_rev(const double* f, const double* r, std::size_t n,
                       double shift) {
  const float64x2_t sh = vdupq_n_f64(shift);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t fv = vld1q_f64(f + i);
    float64x2_t rv = rev2(vld1q_f64(r + (n - 2 - i)));
    acc = vaddq_f64(acc, exp2lanes(vsubq_f64(vaddq_f64(fv, rv), sh)));
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += std::exp(f[i] + r[n - 1 - i] - shift);
  return s;
}

}  // namespace permlab::kernels::neon

#endif  // aarch64
