#pragma once

#include <cstddef>

// Flat-array arithmetic kernels for the momentum-grid reductions and the
// quadrature inner loops. Scalar reference implementations always exist;
// AVX2 (x86-64) and NEON (aarch64) variants are selected once at runtime.
// Complex data is passed in planar (split re/im) layout.

namespace msk::kern {

struct CSum {
  double re;
  double im;
};

// Radial lookup table with uniform spacing, linearly interpolated and
// clamped to zero beyond the last entry. Used by the quadrature kernels.
struct RadialTable {
  const double* vals;
  std::size_t n;
  double inv_dx;  // 1 / spacing
};

struct Ops {
  const char* name;

  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);

  // sum_i x[i] * y[i] * w[i]
  double (*dot3)(const double* x, const double* y, const double* w,
                 std::size_t n);

  // sum_i conj(a_i) * b_i, planar complex
  CSum (*cdot)(const double* are, const double* aim, const double* bre,
               const double* bim, std::size_t n);

  // sum_i conj(a_i) * b_i * w[i], w real
  CSum (*cdotw)(const double* are, const double* aim, const double* bre,
                const double* bim, const double* w, std::size_t n);

  // y += c * x, planar complex, c = (cre, cim)
  void (*caxpy)(double* yre, double* yim, double cre, double cim,
                const double* xre, const double* xim, std::size_t n);

  // x *= s (real scale applied to one plane)
  void (*scale)(double* x, double s, std::size_t n);

  // Quadrature accumulator in 2 dimensions:
  //   sum_i w[i] * T(sqrt((px[i]-q1x)^2+(py[i]-q1y)^2))
  //              * T(sqrt((px[i]-q2x)^2+(py[i]-q2y)^2))
  double (*quad2)(const double* px, const double* py, const double* w,
                  std::size_t n, double q1x, double q1y, double q2x,
                  double q2y, const RadialTable& t);

  // Same in 3 dimensions.
  double (*quad3)(const double* px, const double* py, const double* pz,
                  const double* w, std::size_t n, double q1x, double q1y,
                  double q1z, double q2x, double q2y, double q2z,
                  const RadialTable& t);
};

/// Kernels selected for this machine. Set MSK_KERNELS=scalar to force the
/// reference path.
const Ops& ops();

/// Reference implementations (always available).
const Ops& scalar_ops();

/// AVX2 implementations, or nullptr if unsupported on this CPU/build.
const Ops* avx2_ops();

/// NEON implementations, or nullptr outside aarch64 builds.
const Ops* neon_ops();

/// Table lookup helper shared by scalar kernels and tests.
inline double table_at(const RadialTable& t, double r) {
  double u = r * t.inv_dx;
  if (u < 0) u = -u;
  std::size_t k = static_cast<std::size_t>(u);
  if (k + 1 >= t.n) return 0.0;
  double f = u - static_cast<double>(k);
  return t.vals[k] + f * (t.vals[k + 1] - t.vals[k]);
}

}  // namespace msk::kern
