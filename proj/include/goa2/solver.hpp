#ifndef GOA2_SOLVER_HPP
#define GOA2_SOLVER_HPP

#include <utility>

#include "goa2/norm.hpp"

namespace goa2 {

enum class Feasibility { Feasible, Infeasible, Indeterminate };

/// Feasibility thresholds on the normalized residual. The gap between the
/// two is reported as indeterminate instead of forcing a verdict.
struct Tolerances {
  double feasible = kTolFeasible;
  double infeasible = kTolInfeasible;
};

Feasibility classify(double residual, const Tolerances& tol = {});
const char* to_string(Feasibility f);

/// Result of one least-squares feasibility decision over u in h.
struct FeasibilityReport {
  bool feasible = false;  // residual < kTolFeasible
  Vector u;               // minimum-norm minimizer, ambient coordinates
  double residual = 0.0;  // ||A u + b|| / max(norm scale, eps)
  int rank = 0;           // numerical rank of the system matrix
  double rhs_norm = 0.0;

  Feasibility classification(const Tolerances& tol = {}) const {
    return classify(residual, tol);
  }
};

/// Decides whether some u in h satisfies [u, v_f] = 0 and
/// [u + v_f, v_b] = 0, for v_f in m1 (= m_F) and v_b in m2 (= m_B) of a
/// certified triple. Residual normalized by |v_f| |v_b|.
FeasibilityReport solve_triple_condition(const DecomposedSpace& space, const Vector& v_f,
                                         const Vector& v_b);

/// Decides whether some u in h satisfies
/// [u, c1 v1 + c2 v2] + [v1, v2]_m = 0 with positive weights c1, c2.
/// Residual normalized by ||[v1,v2]_m|| + ||c1 v1 + c2 v2||.
FeasibilityReport solve_weighted_condition(const DecomposedSpace& space, const Vector& v1,
                                           const Vector& v2, double c1, double c2);

/// Candidate geodesic generator X = u + v for the metric of a NormContext.
struct GeodesicCandidate {
  Vector v;  // m-component, ambient coordinates
  Vector u;  // h-component, ambient coordinates
  double theta = 0.0;
  bool boundary = false;  // v had a component ratio below the theta cut
};

/// Finds u in h making X = u + v a geodesic generator. At the component
/// boundary (v in m1 or m2 up to the cut) u = 0 always works and is
/// returned; otherwise the bracket form [u + v, w]_m = 0 is solved with
/// w the descent vector of v. Residual normalized by ||w|| ||v||.
std::pair<GeodesicCandidate, FeasibilityReport> solve_geodesic_vector(
    const NormContext& ctx, const Vector& v);

/// Independent re-check of a candidate through the fundamental-tensor
/// pairing: max over an orthonormal basis Z of m of
/// |g_v(v, [u + v, Z]_m)|, normalized scale-free. Shares no linear-solve
/// code with the solver.
double check_geodesic_vector(const NormContext& ctx, const GeodesicCandidate& candidate);

/// Scale factor mapping a witness u of the pair condition to the h-part of
/// a geodesic generator for the profile phi at angle theta:
/// phi'(t) / (t phi(t) - (t^2 - 1) phi'(t)).
double geodesic_rescale_factor(const PhiFunction& phi, double theta);

}  // namespace goa2

#endif
