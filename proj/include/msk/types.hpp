#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace msk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Ambient complex Hilbert space C^N with the standard inner product,
/// conjugate-linear in the first argument.
struct ComplexSpace {
  int dim;
  explicit ComplexSpace(int n) : dim(n) {
    if (n < 1) throw std::invalid_argument("ComplexSpace: dim must be >= 1");
  }
};

/// Numerical tolerances used across the toolkit. Defaults are chosen for
/// double precision; near-degenerate subspaces warn instead of failing.
struct Tolerances {
  double involution = 1e-10;  // relative, polar reconstruction / involution checks
  double eig_one = 1e-8;      // scaled by (1 + ||delta||) in the factor test
  double cond_warn = 1e12;    // cond(delta) beyond this raises a warning flag
  double membership = 1e-9;   // subspace membership / symplectic form checks
  double psd_clip = 1e-10;    // relative clip band for principal square roots
  double rank = 1e-12;        // relative pivot threshold in orthonormalization
};

struct RankDeficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularOperatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotStandardError : std::runtime_error {
  enum class Reason { TooFewGenerators, TooManyGenerators, ComplexDegenerate };
  Reason reason;
  NotStandardError(Reason r, const std::string& what)
      : std::runtime_error(what), reason(r) {}
};

inline const char* to_string(NotStandardError::Reason r) {
  switch (r) {
    case NotStandardError::Reason::TooFewGenerators: return "TooFewGenerators";
    case NotStandardError::Reason::TooManyGenerators: return "TooManyGenerators";
    case NotStandardError::Reason::ComplexDegenerate: return "ComplexDegenerate";
  }
  return "?";
}

struct NonFactorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPSDError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpectrumAtOneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpectrumHitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchWithDaggerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MassNegativeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureNotConvergedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExplicitlyUnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace msk
