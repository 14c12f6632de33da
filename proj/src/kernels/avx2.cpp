// AVX2 variants of the flat-array kernels. This translation unit is compiled
// with -mavx2 -mfma on x86-64 only; selection happens at runtime in
// dispatch.cpp.

#include "msk/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

namespace msk::kern {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_a(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * y[i];
  return r;
}

double dot3_a(const double* x, const double* y, const double* w,
              std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xy = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_fmadd_pd(xy, _mm256_loadu_pd(w + i), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * y[i] * w[i];
  return r;
}

CSum cdot_a(const double* are, const double* aim, const double* bre,
            const double* bim, std::size_t n) {
  __m256d rr = _mm256_setzero_pd();
  __m256d ri = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ar = _mm256_loadu_pd(are + i);
    __m256d ai = _mm256_loadu_pd(aim + i);
    __m256d br = _mm256_loadu_pd(bre + i);
    __m256d bi = _mm256_loadu_pd(bim + i);
    rr = _mm256_fmadd_pd(ar, br, rr);
    rr = _mm256_fmadd_pd(ai, bi, rr);
    ri = _mm256_fmadd_pd(ar, bi, ri);
    ri = _mm256_fnmadd_pd(ai, br, ri);
  }
  CSum s{hsum(rr), hsum(ri)};
  for (; i < n; ++i) {
    s.re += are[i] * bre[i] + aim[i] * bim[i];
    s.im += are[i] * bim[i] - aim[i] * bre[i];
  }
  return s;
}

CSum cdotw_a(const double* are, const double* aim, const double* bre,
             const double* bim, const double* w, std::size_t n) {
  __m256d rr = _mm256_setzero_pd();
  __m256d ri = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ar = _mm256_loadu_pd(are + i);
    __m256d ai = _mm256_loadu_pd(aim + i);
    __m256d br = _mm256_loadu_pd(bre + i);
    __m256d bi = _mm256_loadu_pd(bim + i);
    __m256d wv = _mm256_loadu_pd(w + i);
    __m256d tr = _mm256_fmadd_pd(ai, bi, _mm256_mul_pd(ar, br));
    __m256d ti = _mm256_fnmadd_pd(ai, br, _mm256_mul_pd(ar, bi));
    rr = _mm256_fmadd_pd(tr, wv, rr);
    ri = _mm256_fmadd_pd(ti, wv, ri);
  }
  CSum s{hsum(rr), hsum(ri)};
  for (; i < n; ++i) {
    s.re += (are[i] * bre[i] + aim[i] * bim[i]) * w[i];
    s.im += (are[i] * bim[i] - aim[i] * bre[i]) * w[i];
  }
  return s;
}

void caxpy_a(double* yre, double* yim, double cre, double cim,
             const double* xre, const double* xim, std::size_t n) {
  __m256d vr = _mm256_set1_pd(cre);
  __m256d vi = _mm256_set1_pd(cim);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xr = _mm256_loadu_pd(xre + i);
    __m256d xi = _mm256_loadu_pd(xim + i);
    __m256d yr = _mm256_loadu_pd(yre + i);
    __m256d yi = _mm256_loadu_pd(yim + i);
    yr = _mm256_fnmadd_pd(vi, xi, _mm256_fmadd_pd(vr, xr, yr));
    yi = _mm256_fmadd_pd(vi, xr, _mm256_fmadd_pd(vr, xi, yi));
    _mm256_storeu_pd(yre + i, yr);
    _mm256_storeu_pd(yim + i, yi);
  }
  for (; i < n; ++i) {
    double r = yre[i] + cre * xre[i] - cim * xim[i];
    double m = yim[i] + cre * xim[i] + cim * xre[i];
    yre[i] = r;
    yim[i] = m;
  }
}

void scale_a(double* x, double s, std::size_t n) {
  __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vs));
  for (; i < n; ++i) x[i] *= s;
}

// Linear interpolation of the radial table at 4 radii; entries at or past
// the table end evaluate to zero.
inline __m256d table4(const RadialTable& t, __m256d r) {
  __m256d u = _mm256_mul_pd(r, _mm256_set1_pd(t.inv_dx));
  __m256d nmax = _mm256_set1_pd(static_cast<double>(t.n - 1));
  __m256d ok = _mm256_cmp_pd(u, nmax, _CMP_LT_OQ);
  __m256d uc = _mm256_min_pd(u, _mm256_sub_pd(nmax, _mm256_set1_pd(1.0)));
  uc = _mm256_max_pd(uc, _mm256_setzero_pd());
  __m256d fl = _mm256_floor_pd(uc);
  __m128i idx = _mm256_cvttpd_epi32(fl);
  __m256d v0 = _mm256_i32gather_pd(t.vals, idx, 8);
  __m256d v1 = _mm256_i32gather_pd(
      t.vals, _mm_add_epi32(idx, _mm_set1_epi32(1)), 8);
  __m256d f = _mm256_sub_pd(uc, fl);
  __m256d v = _mm256_fmadd_pd(f, _mm256_sub_pd(v1, v0), v0);
  return _mm256_and_pd(v, ok);
}

double quad2_a(const double* px, const double* py, const double* w,
               std::size_t n, double q1x, double q1y, double q2x, double q2y,
               const RadialTable& t) {
  __m256d acc = _mm256_setzero_pd();
  __m256d a1x = _mm256_set1_pd(q1x), a1y = _mm256_set1_pd(q1y);
  __m256d a2x = _mm256_set1_pd(q2x), a2y = _mm256_set1_pd(q2y);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(px + i);
    __m256d y = _mm256_loadu_pd(py + i);
    __m256d d1x = _mm256_sub_pd(x, a1x), d1y = _mm256_sub_pd(y, a1y);
    __m256d d2x = _mm256_sub_pd(x, a2x), d2y = _mm256_sub_pd(y, a2y);
    __m256d r1 = _mm256_sqrt_pd(
        _mm256_fmadd_pd(d1y, d1y, _mm256_mul_pd(d1x, d1x)));
    __m256d r2 = _mm256_sqrt_pd(
        _mm256_fmadd_pd(d2y, d2y, _mm256_mul_pd(d2x, d2x)));
    __m256d prod = _mm256_mul_pd(table4(t, r1), table4(t, r2));
    acc = _mm256_fmadd_pd(prod, _mm256_loadu_pd(w + i), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    double d1x = px[i] - q1x, d1y = py[i] - q1y;
    double d2x = px[i] - q2x, d2y = py[i] - q2y;
    r += w[i] * table_at(t, std::sqrt(d1x * d1x + d1y * d1y)) *
         table_at(t, std::sqrt(d2x * d2x + d2y * d2y));
  }
  return r;
}

double quad3_a(const double* px, const double* py, const double* pz,
               const double* w, std::size_t n, double q1x, double q1y,
               double q1z, double q2x, double q2y, double q2z,
               const RadialTable& t) {
  __m256d acc = _mm256_setzero_pd();
  __m256d a1x = _mm256_set1_pd(q1x), a1y = _mm256_set1_pd(q1y),
          a1z = _mm256_set1_pd(q1z);
  __m256d a2x = _mm256_set1_pd(q2x), a2y = _mm256_set1_pd(q2y),
          a2z = _mm256_set1_pd(q2z);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(px + i);
    __m256d y = _mm256_loadu_pd(py + i);
    __m256d z = _mm256_loadu_pd(pz + i);
    __m256d dx = _mm256_sub_pd(x, a1x), dy = _mm256_sub_pd(y, a1y),
            dz = _mm256_sub_pd(z, a1z);
    __m256d r1 = _mm256_sqrt_pd(_mm256_fmadd_pd(
        dz, dz, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dx, dx))));
    dx = _mm256_sub_pd(x, a2x);
    dy = _mm256_sub_pd(y, a2y);
    dz = _mm256_sub_pd(z, a2z);
    __m256d r2 = _mm256_sqrt_pd(_mm256_fmadd_pd(
        dz, dz, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dx, dx))));
    __m256d prod = _mm256_mul_pd(table4(t, r1), table4(t, r2));
    acc = _mm256_fmadd_pd(prod, _mm256_loadu_pd(w + i), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    double d1x = px[i] - q1x, d1y = py[i] - q1y, d1z = pz[i] - q1z;
    double d2x = px[i] - q2x, d2y = py[i] - q2y, d2z = pz[i] - q2z;
    r += w[i] *
         table_at(t, std::sqrt(d1x * d1x + d1y * d1y + d1z * d1z)) *
         table_at(t, std::sqrt(d2x * d2x + d2y * d2y + d2z * d2z));
  }
  return r;
}

}  // namespace

const Ops* avx2_impl_table() {
  static const Ops ops = {"avx2",  dot_a,   dot3_a,  cdot_a, cdotw_a,
                          caxpy_a, scale_a, quad2_a, quad3_a};
  return &ops;
}

}  // namespace msk::kern

#else  // !__AVX2__

namespace msk::kern {
const Ops* avx2_impl_table() { return nullptr; }
}  // namespace msk::kern

#endif
#else  // not x86-64

namespace msk::kern {
const Ops* avx2_impl_table() { return nullptr; }
}  // namespace msk::kern

#endif
