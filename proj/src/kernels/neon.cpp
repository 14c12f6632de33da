// NEON variants for aarch64. Only the reduction kernels are vectorized here;
// the table-lookup quadrature kernels fall back to the scalar path (gathers
// bring no win on NEON).

#include "msk/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace msk::kern {
namespace {

double dot_n(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += x[i] * y[i];
  return r;
}

double dot3_n(const double* x, const double* y, const double* w,
              std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t xy = vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
    acc = vfmaq_f64(acc, xy, vld1q_f64(w + i));
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += x[i] * y[i] * w[i];
  return r;
}

CSum cdot_n(const double* are, const double* aim, const double* bre,
            const double* bim, std::size_t n) {
  float64x2_t rr = vdupq_n_f64(0.0), ri = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t ar = vld1q_f64(are + i), ai = vld1q_f64(aim + i);
    float64x2_t br = vld1q_f64(bre + i), bi = vld1q_f64(bim + i);
    rr = vfmaq_f64(vfmaq_f64(rr, ar, br), ai, bi);
    ri = vfmsq_f64(vfmaq_f64(ri, ar, bi), ai, br);
  }
  CSum s{vaddvq_f64(rr), vaddvq_f64(ri)};
  for (; i < n; ++i) {
    s.re += are[i] * bre[i] + aim[i] * bim[i];
    s.im += are[i] * bim[i] - aim[i] * bre[i];
  }
  return s;
}

CSum cdotw_n(const double* are, const double* aim, const double* bre,
             const double* bim, const double* w, std::size_t n) {
  float64x2_t rr = vdupq_n_f64(0.0), ri = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t ar = vld1q_f64(are + i), ai = vld1q_f64(aim + i);
    float64x2_t br = vld1q_f64(bre + i), bi = vld1q_f64(bim + i);
    float64x2_t wv = vld1q_f64(w + i);
    float64x2_t tr = vfmaq_f64(vmulq_f64(ar, br), ai, bi);
    float64x2_t ti = vfmsq_f64(vmulq_f64(ar, bi), ai, br);
    rr = vfmaq_f64(rr, tr, wv);
    ri = vfmaq_f64(ri, ti, wv);
  }
  CSum s{vaddvq_f64(rr), vaddvq_f64(ri)};
  for (; i < n; ++i) {
    s.re += (are[i] * bre[i] + aim[i] * bim[i]) * w[i];
    s.im += (are[i] * bim[i] - aim[i] * bre[i]) * w[i];
  }
  return s;
}

void caxpy_n(double* yre, double* yim, double cre, double cim,
             const double* xre, const double* xim, std::size_t n) {
  float64x2_t vr = vdupq_n_f64(cre), vi = vdupq_n_f64(cim);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t xr = vld1q_f64(xre + i), xi = vld1q_f64(xim + i);
    float64x2_t yr = vld1q_f64(yre + i), yi = vld1q_f64(yim + i);
    yr = vfmsq_f64(vfmaq_f64(yr, vr, xr), vi, xi);
    yi = vfmaq_f64(vfmaq_f64(yi, vr, xi), vi, xr);
    vst1q_f64(yre + i, yr);
    vst1q_f64(yim + i, yi);
  }
  for (; i < n; ++i) {
    double r = yre[i] + cre * xre[i] - cim * xim[i];
    double m = yim[i] + cre * xim[i] + cim * xre[i];
    yre[i] = r;
    yim[i] = m;
  }
}

void scale_n(double* x, double s, std::size_t n) {
  float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), vs));
  for (; i < n; ++i) x[i] *= s;
}

}  // namespace

const Ops* neon_impl_table() {
  static Ops ops = scalar_ops();
  ops.name = "neon";
  ops.dot = dot_n;
  ops.dot3 = dot3_n;
  ops.cdot = cdot_n;
  ops.cdotw = cdotw_n;
  ops.caxpy = caxpy_n;
  ops.scale = scale_n;
  return &ops;
}

}  // namespace msk::kern

#else

namespace msk::kern {
const Ops* neon_impl_table() { return nullptr; }
}  // namespace msk::kern

#endif
