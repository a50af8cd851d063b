#ifndef GOA2_VERIFY_HPP
#define GOA2_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "goa2/solver.hpp"

namespace goa2 {

struct CampaignConfig {
  std::string space_key;
  int samples = 500;
  std::uint64_t seed = 42;
  std::vector<std::string> phi_sources;  // geodesic mode
  std::vector<double> thetas;            // theta mode; strictly interior
  Tolerances tol;
  int jobs = 1;
  int split = 3;  // Wallach summand selector (1..3)
};

enum class Verdict { GoVerified, GoFalsified, Indeterminate };
const char* to_string(Verdict v);

/// Up to three example trials kept for replay, with their sampled vectors in
/// ambient coordinates.
struct WitnessExample {
  int trial = 0;
  Vector v1, v2, u;
  double residual = 0.0;
};

struct CampaignReport {
  std::string space_key;
  std::string mode;
  Verdict verdict = Verdict::Indeterminate;
  long feasible = 0;
  long infeasible = 0;
  long indeterminate = 0;
  long agreements = 0;     // theta / cross-check modes
  long disagreements = 0;  // theta / cross-check modes
  double residual_min = 0.0;
  double residual_median = 0.0;
  double residual_max = 0.0;
  std::vector<WitnessExample> witnesses;
  CampaignConfig config;
  std::string basis_fingerprint;
  double wall_seconds = 0.0;
};

/// Hash of the algebra basis matrices and the three subspace coefficient
/// bases, entries rounded at 1e-12; pins witness coordinates to a basis.
std::string basis_fingerprint(const DecomposedSpace& space);

/// Draws (v_F, v_B) from the unit spheres of m1, m2 and runs the pair
/// condition per sample. Requires a certified triple.
CampaignReport campaign_triple_condition(const DecomposedSpace& space,
                                         const CampaignConfig& cfg);

/// Per sample, rescales the pair to hit every theta in cfg.thetas and checks
/// that the feasibility verdicts agree across all of them. Requires a triple
/// and at least two thetas.
CampaignReport campaign_theta_independence(const DecomposedSpace& space,
                                           const CampaignConfig& cfg);

/// Per generic sample v and per profile in cfg.phi_sources, solves the
/// geodesic system and re-checks the candidate through the independent
/// fundamental-tensor pairing.
CampaignReport campaign_geodesic(const DecomposedSpace& space, const CampaignConfig& cfg);

/// Per sample (v1, v2, c1, c2), compares the weighted bracket condition
/// against geodesic solvability for the matching Riemannian profile
/// riemannian(c1, c2); reports any verdict mismatch.
CampaignReport campaign_weighted_cross_check(const DecomposedSpace& space,
                                             const CampaignConfig& cfg);

}  // namespace goa2

#endif
