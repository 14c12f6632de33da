#include "msk/graph_space.hpp"

namespace msk {

GraphMetric graph_metric(const StandardSubspace& k) {
  const int n = k.dim();
  const AntilinearMap& s = k.modular().s;
  Matrix g(n, n);
  std::vector<Vector> sb(n);
  for (int i = 0; i < n; ++i) sb[i] = s.apply(k.basis_vector(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = k.basis_vector(i).dot(k.basis_vector(j)) + sb[j].dot(sb[i]);
  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("graph_metric: gram_s not positive definite");
  return {std::move(g), llt.matrixL()};
}

Complex graph_inner(const StandardSubspace& k, const Vector& x,
                    const Vector& y) {
  const AntilinearMap& s = k.modular().s;
  Vector sx = s.apply(x), sy = s.apply(y);
  return x.dot(y) + sy.dot(sx);
}

RealMatrix dagger_adjoint(const RealMatrix& t, const StandardSubspace& k1,
                          const StandardSubspace& k2) {
  if (t.cols() != k1.dim() || t.rows() != k2.dim())
    throw DimensionMismatchError("dagger_adjoint: T must be dim(K2) x dim(K1)");
  return t.transpose();
}

double hs_norm_graph(const Matrix& t) { return t.norm(); }
double hs_norm_graph(const RealMatrix& t) { return t.norm(); }

double trace_norm_graph(const Matrix& t) {
  Eigen::JacobiSVD<Matrix> svd(t);
  return svd.singularValues().sum();
}

double trace_norm_graph(const RealMatrix& t) {
  Eigen::JacobiSVD<RealMatrix> svd(t);
  return svd.singularValues().sum();
}

Complex indefinite_form(const StandardSubspace& k, const Vector& x,
                        const Vector& y) {
  const AntilinearMap& s = k.modular().s;
  Vector sx = s.apply(x), sy = s.apply(y);
  return x.dot(y) - sy.dot(sx);
}

}  // namespace msk
