#ifndef GOA2_RNG_HPP
#define GOA2_RNG_HPP

#include <cstdint>

#include "goa2/algebra.hpp"

namespace goa2 {

/// Derives a per-trial sub-seed from the campaign seed by counter mixing, so
/// trial streams are independent of scheduling order.
std::uint64_t trial_seed(std::uint64_t campaign_seed, std::uint64_t trial_index);

/// Deterministic generator with a fixed algorithm (splitmix64 stream,
/// Box-Muller normals); the sample sequence is part of the report format, so
/// it must not depend on the standard library.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi), logarithmically.
  double log_uniform(double lo, double hi);
  double normal();
  Vector gaussian(int dim);
  /// Unit-sphere sample of a subspace, in ambient coordinates.
  Vector unit_sphere(const Subspace& subspace);

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace goa2

#endif
