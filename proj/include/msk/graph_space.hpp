#pragma once

#include "msk/standard_subspace.hpp"
#include "msk/types.hpp"

namespace msk {

/// Graph inner product data of K: gram_s(i,j) = <b_i, b_j>_s in the K-basis
/// and its Cholesky factor. With a Re-orthonormal basis gram_s = 2*Id, so
/// operators on K + iK written in that basis need no further whitening.
struct GraphMetric {
  Matrix gram_s;
  Matrix whitener;  // lower Cholesky factor of gram_s
};

GraphMetric graph_metric(const StandardSubspace& k);

/// <x,y>_s = <x,y> + <s y, s x> on K + iK = C^N.
Complex graph_inner(const StandardSubspace& k, const Vector& x,
                    const Vector& y);

/// Real dagger adjoint of T : K1 -> K2 stored as a real matrix in the
/// Re-orthonormal bases: T-dagger = T^T. The C-linear extension of T to
/// K1 + iK1 has the same matrix in the same bases.
RealMatrix dagger_adjoint(const RealMatrix& t, const StandardSubspace& k1,
                          const StandardSubspace& k2);

/// Hilbert-Schmidt norm with respect to <.,.>_s of an operator given in a
/// Re-orthonormal basis: the Frobenius norm (the sqrt(2) normalization of
/// the basis cancels between the two sides).
double hs_norm_graph(const Matrix& t);
double hs_norm_graph(const RealMatrix& t);

/// Trace norm (sum of singular values) in the same representation.
double trace_norm_graph(const Matrix& t);
double trace_norm_graph(const RealMatrix& t);

/// Indefinite form gamma(x,y) = <x,y> - <s y, s x>; satisfies
/// gamma(s x, s y) = -conj(gamma(y, x)).
Complex indefinite_form(const StandardSubspace& k, const Vector& x,
                        const Vector& y);

}  // namespace msk
