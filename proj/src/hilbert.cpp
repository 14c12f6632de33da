#include "msk/hilbert.hpp"

#include <cmath>

namespace msk {

void LinearMap::verify_flags(bool want_self_adjoint, bool want_positive,
                             double tol) {
  double scale = std::max(1.0, mat.norm());
  if (want_self_adjoint) {
    if ((mat - mat.adjoint()).norm() > tol * scale)
      throw std::invalid_argument("LinearMap: self-adjoint flag fails check");
    self_adjoint = true;
  }
  if (want_positive) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        Matrix(0.5 * (mat + mat.adjoint())), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol * scale)
      throw std::invalid_argument("LinearMap: positive flag fails check");
    positive = true;
  }
}

Matrix EigenCalc::apply(const std::function<Complex(double)>& f) const {
  const int n = static_cast<int>(eigs.size());
  Vector fe(n);
  for (int i = 0; i < n; ++i) fe(i) = f(eigs(i));
  return vecs * fe.asDiagonal() * vecs.adjoint();
}

RealVector EigenCalc::map_eigs(const std::function<double(double)>& f) const {
  RealVector out(eigs.size());
  for (Eigen::Index i = 0; i < eigs.size(); ++i) out(i) = f(eigs(i));
  return out;
}

namespace {

double re_inner(const Vector& a, const Vector& b) {
  return a.dot(b).real();  // Eigen dot conjugates the first argument
}

}  // namespace

std::pair<std::vector<Vector>, RealMatrix> real_orthonormalize_with_coeffs(
    const std::vector<Vector>& vectors, const Tolerances& tol) {
  const int m = static_cast<int>(vectors.size());
  if (m == 0) return {{}, RealMatrix(0, 0)};

  double max_norm = 0.0;
  for (const auto& v : vectors) max_norm = std::max(max_norm, v.norm());
  if (max_norm == 0.0)
    throw RankDeficientError("real_orthonormalize: zero input");

  std::vector<Vector> q(vectors.begin(), vectors.end());
  // T accumulates real coefficients so that q[j] = sum_k vectors[k] T(k,j).
  RealMatrix t = RealMatrix::Identity(m, m);

  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < j; ++k) {
        double c = re_inner(q[k], q[j]);
        q[j] -= c * q[k];
        t.col(j) -= c * t.col(k);
      }
      double nrm = q[j].norm();
      if (nrm <= tol.rank * max_norm)
        throw RankDeficientError(
            "real_orthonormalize: R-linear dependence at vector " +
            std::to_string(j));
      q[j] /= nrm;
      t.col(j) /= nrm;
    }
  }
  return {std::move(q), std::move(t)};
}

std::vector<Vector> real_orthonormalize(const std::vector<Vector>& vectors,
                                        const Tolerances& tol) {
  return real_orthonormalize_with_coeffs(vectors, tol).first;
}

AntilinearMap antilinear_adjoint(const AntilinearMap& s) {
  return AntilinearMap(s.matrix().transpose());
}

PolarResult antilinear_polar(const AntilinearMap& s, const Tolerances& tol) {
  const int n = s.dim();
  const Matrix& a = s.matrix();

  // delta = s* s has matrix A^T conj(A); Hermitian positive when s is
  // invertible.
  Matrix d = a.transpose() * a.conjugate();
  d = 0.5 * (d + Matrix(d.adjoint()));

  Eigen::SelfAdjointEigenSolver<Matrix> es(d);
  if (es.info() != Eigen::Success)
    throw SingularOperatorError("antilinear_polar: eigensolver failed");
  RealVector eigs = es.eigenvalues();
  double lmax = eigs.maxCoeff();
  if (lmax <= 0.0 || eigs.minCoeff() <= lmax * 1e-15)
    throw SingularOperatorError("antilinear_polar: matrix numerically singular");

  EigenCalc calc{eigs, es.eigenvectors()};
  Matrix inv_sqrt = calc.apply([](double l) { return Complex(1.0 / std::sqrt(l)); });

  // j = s o delta^(-1/2): antilinear with matrix A * conj(delta^(-1/2)).
  AntilinearMap j(a * inv_sqrt.conjugate());

  PolarResult res{std::move(j), LinearMap(d), std::move(calc), false, 0.0};
  res.delta.self_adjoint = true;
  res.delta.positive = true;
  res.cond = lmax / eigs.minCoeff();
  res.cond_warning = res.cond > tol.cond_warn;
  return res;
}

Matrix gram_matrix(const std::vector<Vector>& vectors) {
  const int m = static_cast<int>(vectors.size());
  Matrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      g(i, j) = vectors[i].dot(vectors[j]);
      g(j, i) = std::conj(g(i, j));
    }
  return g;
}

RealMatrix gram_matrix_real(const std::vector<Vector>& vectors) {
  const int m = static_cast<int>(vectors.size());
  RealMatrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      g(i, j) = vectors[i].dot(vectors[j]).real();
      g(j, i) = g(i, j);
    }
  return g;
}

Matrix gram_matrix(const std::vector<Vector>& vectors, GramForm form) {
  if (form == GramForm::Complex) return gram_matrix(vectors);
  return gram_matrix_real(vectors).cast<Complex>();
}

}  // namespace msk
