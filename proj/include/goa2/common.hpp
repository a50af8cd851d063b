#ifndef GOA2_COMMON_HPP
#define GOA2_COMMON_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace goa2 {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Certification tolerance: algebraic invariants (Jacobi, bi-invariance,
/// closure, orthogonality, bracket containment) must hold to this bound.
inline constexpr double kTolAlgebra = 1e-10;

/// Rank / dropping tolerance for orthonormalization and least-squares rank
/// decisions.
inline constexpr double kTolRank = 1e-8;

/// Feasibility verdict: normalized residual below this is "feasible".
inline constexpr double kTolFeasible = 1e-8;

/// Infeasibility verdict: normalized residual above this is "infeasible".
/// Residuals in the gap [kTolFeasible, kTolInfeasible] are indeterminate.
inline constexpr double kTolInfeasible = 1e-4;

/// Component-ratio cutoff below which the geodesic solver switches to the
/// Riemannian boundary branch.
inline constexpr double kThetaCut = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Precondition violation (dimension mismatch, zero vector, bad argument).
struct ContractError : Error {
  using Error::Error;
};

/// A constructed object failed one of its certified invariants; the message
/// names the failed invariant and its residual.
struct ConstructionError : Error {
  using Error::Error;
};

struct UnknownKeyError : Error {
  using Error::Error;
};

/// Registry entry exists but is declared not constructible at desk scale.
struct NotConstructedError : Error {
  using Error::Error;
};

}  // namespace goa2

#endif
