#include <cmath>

#include "msk/kernels.hpp"

namespace msk::kern {
namespace {

double dot_s(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double dot3_s(const double* x, const double* y, const double* w,
              std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i] * w[i];
  return acc;
}

CSum cdot_s(const double* are, const double* aim, const double* bre,
            const double* bim, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += are[i] * bre[i] + aim[i] * bim[i];
    im += are[i] * bim[i] - aim[i] * bre[i];
  }
  return {re, im};
}

CSum cdotw_s(const double* are, const double* aim, const double* bre,
             const double* bim, const double* w, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += (are[i] * bre[i] + aim[i] * bim[i]) * w[i];
    im += (are[i] * bim[i] - aim[i] * bre[i]) * w[i];
  }
  return {re, im};
}

void caxpy_s(double* yre, double* yim, double cre, double cim,
             const double* xre, const double* xim, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    yre[i] += cre * xre[i] - cim * xim[i];
    yim[i] += cre * xim[i] + cim * xre[i];
  }
}

void scale_s(double* x, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= s;
}

double quad2_s(const double* px, const double* py, const double* w,
               std::size_t n, double q1x, double q1y, double q2x, double q2y,
               const RadialTable& t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d1x = px[i] - q1x, d1y = py[i] - q1y;
    double d2x = px[i] - q2x, d2y = py[i] - q2y;
    double r1 = std::sqrt(d1x * d1x + d1y * d1y);
    double r2 = std::sqrt(d2x * d2x + d2y * d2y);
    acc += w[i] * table_at(t, r1) * table_at(t, r2);
  }
  return acc;
}

double quad3_s(const double* px, const double* py, const double* pz,
               const double* w, std::size_t n, double q1x, double q1y,
               double q1z, double q2x, double q2y, double q2z,
               const RadialTable& t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d1x = px[i] - q1x, d1y = py[i] - q1y, d1z = pz[i] - q1z;
    double d2x = px[i] - q2x, d2y = py[i] - q2y, d2z = pz[i] - q2z;
    double r1 = std::sqrt(d1x * d1x + d1y * d1y + d1z * d1z);
    double r2 = std::sqrt(d2x * d2x + d2y * d2y + d2z * d2z);
    acc += w[i] * table_at(t, r1) * table_at(t, r2);
  }
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {"scalar", dot_s,   dot3_s,  cdot_s, cdotw_s,
                          caxpy_s,  scale_s, quad2_s, quad3_s};
  return ops;
}

}  // namespace msk::kern
