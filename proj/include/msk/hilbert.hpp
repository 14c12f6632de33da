#pragma once

#include <functional>
#include <vector>

#include "msk/types.hpp"

namespace msk {

/// Antilinear map on C^N, acting as x -> A * conj(x).
///
/// Composition rule: (A1 o A2)(x) = A1 * conj(A2) * x is again of this form
/// with matrix A1 * conj(A2). The adjoint convention <s* x, y> = <s y, x>
/// makes the adjoint matrix the plain transpose.
class AntilinearMap {
 public:
  explicit AntilinearMap(Matrix a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols())
      throw DimensionMismatchError("AntilinearMap: matrix must be square");
  }

  int dim() const { return static_cast<int>(a_.rows()); }
  const Matrix& matrix() const { return a_; }

  Vector apply(const Vector& x) const { return a_ * x.conjugate(); }

  /// this o other (antilinear o antilinear = complex linear, returned as the
  /// matrix A1 * conj(A2)).
  Matrix compose_matrix(const AntilinearMap& other) const {
    return a_ * other.a_.conjugate();
  }

  bool is_involution(double tol) const {
    Matrix p = a_ * a_.conjugate();
    double scale = std::max(1.0, a_.norm());
    return (p - Matrix::Identity(dim(), dim())).norm() <= tol * scale * scale;
  }

 private:
  Matrix a_;
};

/// Complex linear map on C^N with optional numerically verified flags.
struct LinearMap {
  Matrix mat;
  bool self_adjoint = false;
  bool positive = false;

  LinearMap() = default;
  explicit LinearMap(Matrix m) : mat(std::move(m)) {}

  int dim() const { return static_cast<int>(mat.rows()); }
  Vector apply(const Vector& x) const { return mat * x; }

  /// Set the self-adjoint/positive flags after checking them numerically.
  void verify_flags(bool want_self_adjoint, bool want_positive, double tol);
};

/// Hermitian eigendecomposition cache; the functional calculus entry point
/// used for every f(delta) downstream.
struct EigenCalc {
  RealVector eigs;  // ascending
  Matrix vecs;      // unitary, columns are eigenvectors

  Matrix apply(const std::function<Complex(double)>& f) const;
  RealVector map_eigs(const std::function<double(double)>& f) const;
};

struct PolarResult {
  AntilinearMap j;
  LinearMap delta;
  EigenCalc delta_calc;
  bool cond_warning = false;
  double cond = 0.0;
};

/// Modified Gram-Schmidt with one full re-orthogonalization pass, with
/// respect to Re<.,.>. Deterministic in input order, no pivoting.
/// Throws RankDeficientError when a pivot falls below tol.rank relative to
/// the largest input norm.
std::vector<Vector> real_orthonormalize(const std::vector<Vector>& vectors,
                                        const Tolerances& tol = {});

/// As above, also returning the real coefficient matrix T with
/// out[j] = sum_k in[k] * T(k, j).
std::pair<std::vector<Vector>, RealMatrix> real_orthonormalize_with_coeffs(
    const std::vector<Vector>& vectors, const Tolerances& tol = {});

/// Adjoint with respect to <s* x, y> = <s y, x>: matrix A -> A^T.
AntilinearMap antilinear_adjoint(const AntilinearMap& s);

/// Polar decomposition s = j * delta^(1/2) of an invertible antilinear map,
/// via the Hermitian eigendecomposition of delta = s* s. For a Tomita
/// operator (s^2 = 1) the returned j is an antilinear involution and
/// j delta j = delta^(-1).
PolarResult antilinear_polar(const AntilinearMap& s,
                             const Tolerances& tol = {});

enum class GramForm { Complex, RealPart };

/// Complex Gram matrix G(i,j) = <v_i, v_j>.
Matrix gram_matrix(const std::vector<Vector>& vectors);

/// Real-part Gram matrix G(i,j) = Re<v_i, v_j>.
RealMatrix gram_matrix_real(const std::vector<Vector>& vectors);

/// Form-dispatched variant; RealPart entries are returned with zero
/// imaginary part.
Matrix gram_matrix(const std::vector<Vector>& vectors, GramForm form);

}  // namespace msk
