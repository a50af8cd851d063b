#include "goa2/rng.hpp"

#include <cmath>
#include <numbers>

namespace goa2 {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::uint64_t trial_index) {
  std::uint64_t s = campaign_seed ^ (0x9e3779b97f4a7c15ull * (trial_index + 1));
  return splitmix64(s);
}

std::uint64_t TrialRng::next_u64() { return splitmix64(state_); }

double TrialRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::log_uniform(double lo, double hi) {
  return std::exp(std::log(lo) + uniform() * (std::log(hi) - std::log(lo)));
}

double TrialRng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(angle);
  has_cached_ = true;
  return r * std::cos(angle);
}

Vector TrialRng::gaussian(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = normal();
  return v;
}

Vector TrialRng::unit_sphere(const Subspace& subspace) {
  if (subspace.dim() == 0) throw ContractError("unit_sphere: empty subspace");
  Vector coords = gaussian(subspace.dim());
  double norm = coords.norm();
  while (norm < 1e-12) {
    coords = gaussian(subspace.dim());
    norm = coords.norm();
  }
  return subspace.lift(coords / norm);
}

}  // namespace goa2
