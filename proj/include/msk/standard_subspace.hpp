#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "msk/hilbert.hpp"
#include "msk/types.hpp"

namespace msk {

class StandardSubspace;

/// The modular triple (s, j, delta) of a standard subspace together with the
/// derived operators: the polariser R = i(delta-1)/(delta+1), the angle
/// operator theta with tan(theta/2) = exp(-|log delta|/2), the sign operator
/// gamma = sgn log delta (sgn(0) := 0), and the spectral projections
/// e_minus, e_one, e_plus of delta for [0,1), {1}, (1,inf).
struct ModularData {
  AntilinearMap s;
  AntilinearMap j;
  LinearMap delta;
  EigenCalc delta_calc;
  LinearMap r;
  LinearMap theta;
  LinearMap gamma;
  LinearMap e_minus, e_one, e_plus;
  bool cond_warning = false;
  double cond = 0.0;

  /// f(delta) through the cached eigendecomposition.
  Matrix calc(const std::function<Complex(double)>& f) const {
    return delta_calc.apply(f);
  }
};

/// A standard real subspace K of C^N: dim_R K = N, the basis matrix is
/// invertible over C (K + iK = C^N and K cap iK = {0}), and the stored basis
/// is Re-orthonormal. Immutable; modular data is computed once at
/// construction and shared.
class StandardSubspace {
 public:
  static StandardSubspace from_real_span(const ComplexSpace& space,
                                         const std::vector<Vector>& vectors,
                                         const Tolerances& tol = {});

  int dim() const { return static_cast<int>(basis_.cols()); }
  /// Basis matrix B; column k is the k-th Re-orthonormal basis vector.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(int k) const { return basis_.col(k); }

  bool factor() const { return factor_; }
  /// Re-orthonormal basis of K cap K' (empty iff factor).
  const std::vector<Vector>& fixed_space() const { return fixed_space_; }

  const ModularData& modular() const { return *modular_; }
  const Tolerances& tolerances() const { return tol_; }

  /// Re-orthogonal projection onto K (real linear).
  Vector project_re(const Vector& x) const;
  /// || (1 - P_K) x ||.
  double re_distance(const Vector& x) const;

 private:
  StandardSubspace() = default;

  Matrix basis_;
  bool factor_ = false;
  std::vector<Vector> fixed_space_;
  std::shared_ptr<const ModularData> modular_;
  Tolerances tol_;
};

/// Tomita operator of K: s(h + ik) = h - ik, matrix B * conj(B^-1). An exact
/// antilinear involution fixing K pointwise.
AntilinearMap tomita_operator(const StandardSubspace& k);

/// Full modular data (cached inside the subspace).
const ModularData& modular_data(const StandardSubspace& k);

/// Symplectic complement K' = jK; verifies Im<b_i, j b_k> = 0 on all pairs.
StandardSubspace symplectic_complement(const StandardSubspace& k);

/// Factoriality test: factor iff no delta eigenvalue within
/// tol.eig_one * (1 + ||delta||) of 1. Returns the flag and a real basis of
/// K cap K' built from {h + jh, i(h - jh)} over unit eigenvectors h.
std::pair<bool, std::vector<Vector>> is_factor(const StandardSubspace& k);

/// R^-1 = -i(delta+1)(delta-1)^-1 on a factor subspace; in finite dimension
/// 1 is then outside sigma(delta) and RK = K exactly. Throws NonFactorError
/// otherwise.
LinearMap polariser_inverse(const StandardSubspace& k);

/// Polariser matrix in the Re-orthonormal K-basis. R maps K into K, so the
/// matrix is real (and skew-symmetric).
RealMatrix polariser_in_basis(const StandardSubspace& k);

/// Conjugate an ambient operator into the K-basis: B^-1 M B.
Matrix in_basis(const StandardSubspace& k, const Matrix& ambient_op);

/// Inverse conjugation: ambient matrix of an operator given in the K-basis.
Matrix from_basis(const StandardSubspace& k, const Matrix& basis_op);

}  // namespace msk
