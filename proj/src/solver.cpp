#include "goa2/solver.hpp"

#include <Eigen/QR>
#include <cmath>

namespace goa2 {

namespace {

struct LstsqResult {
  Vector solution;
  double residual = 0.0;
  int rank = 0;
};

// Minimum-norm least squares via complete orthogonal decomposition
// (column-pivoted QR with a Z factor), rank threshold kTolRank. The
// threshold must be in place before compute(): the Z factor is built for
// the rank determined there, and solve() must agree with it.
LstsqResult lstsq_min_norm(const Matrix& A, const Vector& b) {
  LstsqResult out;
  if (A.cols() == 0) {
    out.solution = Vector::Zero(0);
    out.residual = b.norm();
    return out;
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
  cod.setThreshold(kTolRank);
  cod.compute(A);
  out.solution = cod.solve(b);
  out.rank = static_cast<int>(cod.rank());
  out.residual = (A * out.solution - b).norm();
  return out;
}

double guarded(double scale) { return std::max(scale, 1e-30); }

}  // namespace

Feasibility classify(double residual, const Tolerances& tol) {
  if (residual < tol.feasible) return Feasibility::Feasible;
  if (residual > tol.infeasible) return Feasibility::Infeasible;
  return Feasibility::Indeterminate;
}

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Indeterminate: return "indeterminate";
  }
  return "?";
}

FeasibilityReport solve_triple_condition(const DecomposedSpace& space, const Vector& v_f,
                                         const Vector& v_b) {
  if (!space.is_triple())
    throw ContractError("solve_triple_condition: space is not a certified triple");
  const LieAlgebra& g = *space.algebra();
  const int n = g.dim();
  if (v_f.size() != n || v_b.size() != n)
    throw ContractError("solve_triple_condition: dimension mismatch");

  const Matrix& h = space.h().basis();  // n x dim_h
  // Stacked over u in h, in ambient coordinates:
  //   [u, v_f]           = 0
  //   [u, v_b]           = -[v_f, v_b]
  const Matrix ad_vf = g.ad(v_f);
  const Matrix ad_vb = g.ad(v_b);
  Matrix A(2 * n, h.cols());
  A.topRows(n) = -ad_vf * h;  // [u, v_f] = -ad(v_f) u
  A.bottomRows(n) = -ad_vb * h;
  Vector b(2 * n);
  b.head(n).setZero();
  b.tail(n) = -g.bracket(v_f, v_b);

  LstsqResult ls = lstsq_min_norm(A, b);
  FeasibilityReport report;
  report.u = space.h().dim() > 0 ? Vector(h * ls.solution) : Vector(Vector::Zero(n));
  report.rank = ls.rank;
  report.rhs_norm = b.norm();
  report.residual = ls.residual / guarded(v_f.norm() * v_b.norm());
  report.feasible = report.residual < kTolFeasible;
  return report;
}

FeasibilityReport solve_weighted_condition(const DecomposedSpace& space, const Vector& v1,
                                           const Vector& v2, double c1, double c2) {
  if (c1 <= 0.0 || c2 <= 0.0)
    throw ContractError("solve_weighted_condition: weights must be positive");
  if (v1.norm() == 0.0 || v2.norm() == 0.0)
    throw ContractError("solve_weighted_condition: zero summand vector");
  const LieAlgebra& g = *space.algebra();
  const int n = g.dim();
  if (v1.size() != n || v2.size() != n)
    throw ContractError("solve_weighted_condition: dimension mismatch");

  const Vector combo = c1 * v1 + c2 * v2;
  const Vector rhs_bracket = space.m().project(g.bracket(v1, v2));
  const Matrix& h = space.h().basis();
  // [u, combo] lies in m by reductivity; the equation is taken in ambient
  // coordinates with the m-projection on the right side.
  Matrix A = -g.ad(combo) * h;
  Vector b = -rhs_bracket;

  LstsqResult ls = lstsq_min_norm(A, b);
  FeasibilityReport report;
  report.u = space.h().dim() > 0 ? Vector(h * ls.solution) : Vector(Vector::Zero(n));
  report.rank = ls.rank;
  report.rhs_norm = b.norm();
  report.residual = ls.residual / guarded(rhs_bracket.norm() + combo.norm());
  report.feasible = report.residual < kTolFeasible;
  return report;
}

std::pair<GeodesicCandidate, FeasibilityReport> solve_geodesic_vector(const NormContext& ctx,
                                                                      const Vector& v) {
  const DecomposedSpace& space = ctx.space();
  const LieAlgebra& g = *space.algebra();
  const int n = g.dim();
  if (v.size() != n) throw ContractError("solve_geodesic_vector: dimension mismatch");
  const double vnorm = v.norm();
  if (vnorm == 0.0) throw ContractError("solve_geodesic_vector: zero vector");

  GeodesicCandidate cand;
  cand.v = v;
  const double ratio =
      std::min(space.m1().project(v).norm(), space.m2().project(v).norm()) / vnorm;

  if (ratio < kThetaCut) {
    // Riemannian boundary branch: <[X,Z]_m, v> = 0 for all Z holds with
    // u = 0 by bi-invariance ([v,v] = 0).
    cand.u = Vector::Zero(n);
    cand.theta = ctx.theta(v);
    cand.boundary = true;
    FeasibilityReport report;
    report.u = cand.u;
    report.residual = 0.0;
    report.rank = 0;
    report.rhs_norm = 0.0;
    report.feasible = true;
    return {cand, report};
  }

  const Vector w = ctx.descent_vector(v);
  const Matrix& h = space.h().basis();
  // [u + v, w]_m = 0 over u in h, equivalent to the pairing condition by
  // bi-invariance. Rows are the m-coordinates.
  const Matrix proj_m = space.m().basis().transpose();  // dim_m x n
  Matrix A = proj_m * (-g.ad(w) * h);
  Vector b = -(proj_m * g.bracket(v, w));

  LstsqResult ls = lstsq_min_norm(A, b);
  cand.u = space.h().dim() > 0 ? Vector(h * ls.solution) : Vector(Vector::Zero(n));
  cand.theta = ctx.theta(v);
  cand.boundary = false;

  FeasibilityReport report;
  report.u = cand.u;
  report.rank = ls.rank;
  report.rhs_norm = b.norm();
  report.residual = ls.residual / guarded(w.norm() * vnorm);
  report.feasible = report.residual < kTolFeasible;
  return {cand, report};
}

double check_geodesic_vector(const NormContext& ctx, const GeodesicCandidate& candidate) {
  const DecomposedSpace& space = ctx.space();
  const LieAlgebra& g = *space.algebra();
  const Vector& v = candidate.v;
  const double vnorm = v.norm();
  if (vnorm == 0.0) throw ContractError("check_geodesic_vector: zero vector");
  const Vector x = candidate.u + v;

  const double ratio =
      std::min(space.m1().project(v).norm(), space.m2().project(v).norm()) / vnorm;
  double worst = 0.0;
  if (ratio < kThetaCut) {
    // At the boundary the g_v-pairing against v reduces to the plain inner
    // product pairing.
    for (int i = 0; i < space.m().dim(); ++i) {
      const Vector z = space.m().basis_vector(i);
      const Vector bz = space.m().project(g.bracket(x, z));
      worst = std::max(worst, std::abs(v.dot(bz)));
    }
    return worst / guarded(vnorm * vnorm);
  }

  const double t = ctx.theta(v);
  const double phi = ctx.phi().eval(t).first;
  const double scale = phi * ctx.descent_vector(v).norm() * vnorm;
  for (int i = 0; i < space.m().dim(); ++i) {
    const Vector z = space.m().basis_vector(i);
    const Vector bz = space.m().project(g.bracket(x, z));
    worst = std::max(worst, std::abs(ctx.fundamental_tensor(v, bz)));
  }
  return worst / guarded(scale);
}

double geodesic_rescale_factor(const PhiFunction& phi, double theta) {
  if (theta <= 0.0 || theta >= 1.0)
    throw ContractError("geodesic_rescale_factor: theta must be interior");
  const auto [p, dp] = phi.eval(theta);
  const double denom = theta * p - (theta * theta - 1.0) * dp;
  return dp / denom;
}

}  // namespace goa2
