#include "msk/standard_subspace.hpp"

#include <cmath>
#include <numbers>

namespace msk {

namespace {

// Spectral projections of delta for [0, 1-band), {1 within band}, (1+band, inf).
struct SplitProjections {
  Matrix e_minus, e_one, e_plus;
  std::vector<int> one_indices;
};

SplitProjections split_projections(const EigenCalc& calc, double band) {
  const int n = static_cast<int>(calc.eigs.size());
  Matrix em = Matrix::Zero(n, n), e1 = Matrix::Zero(n, n),
         ep = Matrix::Zero(n, n);
  std::vector<int> ones;
  for (int i = 0; i < n; ++i) {
    Matrix rank1 = calc.vecs.col(i) * calc.vecs.col(i).adjoint();
    double l = calc.eigs(i);
    if (std::abs(l - 1.0) <= band) {
      e1 += rank1;
      ones.push_back(i);
    } else if (l < 1.0) {
      em += rank1;
    } else {
      ep += rank1;
    }
  }
  return {std::move(em), std::move(e1), std::move(ep), std::move(ones)};
}

std::shared_ptr<const ModularData> build_modular(const Matrix& basis,
                                                 const Tolerances& tol) {
  // s(x) = B conj(B^-1 x): fixes every basis column, involutive by
  // construction.
  Matrix binv = basis.inverse();
  AntilinearMap s(basis * binv.conjugate());

  PolarResult polar = antilinear_polar(s, tol);
  double band = tol.eig_one * (1.0 + polar.delta_calc.eigs.maxCoeff());
  SplitProjections sp = split_projections(polar.delta_calc, band);

  auto r_mat = polar.delta_calc.apply([](double l) {
    return Complex(0.0, (l - 1.0) / (l + 1.0));
  });
  auto theta_mat = polar.delta_calc.apply([](double l) {
    return Complex(2.0 * std::atan(std::exp(-0.5 * std::abs(std::log(l)))));
  });
  // gamma = sgn log delta with the unit band mapped to 0, consistent with
  // e_plus - e_minus.
  Matrix gamma_mat = sp.e_plus - sp.e_minus;

  auto md = std::make_shared<ModularData>(ModularData{
      std::move(s), std::move(polar.j), std::move(polar.delta),
      std::move(polar.delta_calc), LinearMap(std::move(r_mat)),
      LinearMap(std::move(theta_mat)), LinearMap(std::move(gamma_mat)),
      LinearMap(std::move(sp.e_minus)), LinearMap(std::move(sp.e_one)),
      LinearMap(std::move(sp.e_plus)), polar.cond_warning, polar.cond});
  md->r.self_adjoint = false;  // skew-adjoint
  md->theta.self_adjoint = true;
  md->gamma.self_adjoint = true;
  return md;
}

std::vector<Vector> fixed_space_basis(const Matrix& basis,
                                      const ModularData& md,
                                      const Tolerances& tol) {
  const int n = static_cast<int>(basis.rows());
  double band = tol.eig_one * (1.0 + md.delta_calc.eigs.maxCoeff());

  std::vector<Vector> candidates;
  for (int i = 0; i < n; ++i) {
    if (std::abs(md.delta_calc.eigs(i) - 1.0) > band) continue;
    Vector h = md.delta_calc.vecs.col(i);
    Vector jh = md.j.apply(h);
    candidates.push_back(h + jh);
    candidates.push_back(Complex(0, 1) * (h - jh));
  }
  if (candidates.empty()) return {};

  // Exactly half of the candidates survive: pivoted Re-orthonormalization,
  // dropping dependent or vanishing ones.
  std::vector<Vector> kept;
  for (auto& c : candidates) {
    Vector v = c;
    for (const auto& e : kept) v -= e.dot(v).real() * e;
    for (const auto& e : kept) v -= e.dot(v).real() * e;
    double nrm = v.norm();
    if (nrm > 1e-7 * std::max(1.0, c.norm())) kept.push_back(v / nrm);
  }
  return kept;
}

}  // namespace

StandardSubspace StandardSubspace::from_real_span(
    const ComplexSpace& space, const std::vector<Vector>& vectors,
    const Tolerances& tol) {
  const int n = space.dim;
  if (static_cast<int>(vectors.size()) < n)
    throw NotStandardError(NotStandardError::Reason::TooFewGenerators,
                           "from_real_span: fewer generators than dim");
  if (static_cast<int>(vectors.size()) > n)
    throw NotStandardError(NotStandardError::Reason::TooManyGenerators,
                           "from_real_span: more generators than dim");
  for (const auto& v : vectors)
    if (v.size() != n)
      throw DimensionMismatchError("from_real_span: vector of wrong dimension");

  std::vector<Vector> onb;
  try {
    onb = real_orthonormalize(vectors, tol);
  } catch (const RankDeficientError&) {
    // R-linear dependence means the real span is too small to be standard.
    throw NotStandardError(NotStandardError::Reason::TooFewGenerators,
                           "from_real_span: generators R-linearly dependent");
  }

  Matrix basis(n, n);
  for (int k = 0; k < n; ++k) basis.col(k) = onb[k];

  // K + iK = C^N iff the basis matrix is invertible over C.
  Eigen::FullPivLU<Matrix> lu(basis);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible())
    throw NotStandardError(NotStandardError::Reason::ComplexDegenerate,
                           "from_real_span: K cap iK is nontrivial");

  StandardSubspace k;
  k.basis_ = std::move(basis);
  k.tol_ = tol;
  k.modular_ = build_modular(k.basis_, tol);
  k.fixed_space_ = fixed_space_basis(k.basis_, *k.modular_, tol);
  k.factor_ = k.fixed_space_.empty();
  return k;
}

Vector StandardSubspace::project_re(const Vector& x) const {
  Vector out = Vector::Zero(x.size());
  for (int k = 0; k < dim(); ++k) {
    Vector b = basis_.col(k);
    out += b.dot(x).real() * b;
  }
  return out;
}

double StandardSubspace::re_distance(const Vector& x) const {
  return (x - project_re(x)).norm();
}

AntilinearMap tomita_operator(const StandardSubspace& k) {
  return k.modular().s;
}

const ModularData& modular_data(const StandardSubspace& k) {
  return k.modular();
}

StandardSubspace symplectic_complement(const StandardSubspace& k) {
  const int n = k.dim();
  const ModularData& md = k.modular();
  std::vector<Vector> jb;
  jb.reserve(n);
  for (int i = 0; i < n; ++i) jb.push_back(md.j.apply(k.basis_vector(i)));

  // Independent check of Im<b_i, j b_k> = 0 (jK sits inside K').
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      worst = std::max(worst,
                       std::abs(k.basis_vector(i).dot(jb[l]).imag()));
  if (worst > k.tolerances().membership)
    throw std::runtime_error(
        "symplectic_complement: jK fails the symplectic orthogonality check");

  return StandardSubspace::from_real_span(ComplexSpace(n), jb,
                                          k.tolerances());
}

std::pair<bool, std::vector<Vector>> is_factor(const StandardSubspace& k) {
  return {k.factor(), k.fixed_space()};
}

LinearMap polariser_inverse(const StandardSubspace& k) {
  if (!k.factor())
    throw NonFactorError("polariser_inverse: 1 is an eigenvalue of delta");
  const ModularData& md = k.modular();
  Matrix rinv = md.calc([](double l) {
    return Complex(0.0, -(l + 1.0) / (l - 1.0));
  });

  // RK = K in the factorial finite-dimensional case: verify R^-1 R b = b.
  const Matrix& r = md.r.mat;
  double worst = 0.0;
  for (int i = 0; i < k.dim(); ++i) {
    Vector b = k.basis_vector(i);
    worst = std::max(worst, (Vector(rinv * (r * b)) - b).norm());
  }
  if (worst > 1e-6 * (1.0 + rinv.norm()))
    throw std::runtime_error("polariser_inverse: R^-1 R != 1 beyond tolerance");

  LinearMap out(std::move(rinv));
  return out;
}

RealMatrix polariser_in_basis(const StandardSubspace& k) {
  Matrix rb = in_basis(k, k.modular().r.mat);
  // R preserves K, so the K-basis matrix is real up to roundoff.
  return rb.real();
}

Matrix in_basis(const StandardSubspace& k, const Matrix& ambient_op) {
  return k.basis().inverse() * ambient_op * k.basis();
}

Matrix from_basis(const StandardSubspace& k, const Matrix& basis_op) {
  return k.basis() * basis_op * k.basis().inverse();
}

}  // namespace msk
