#include "goa2/norm.hpp"

#include <cmath>

namespace goa2 {

void NormContext::require_in_m(const Vector& v) const {
  if (v.size() != space_.algebra()->dim())
    throw ContractError("norm: dimension mismatch");
  if (space_.h().dim() > 0 && space_.h().project(v).norm() > kTolAlgebra * std::max(1.0, v.norm()))
    throw ContractError("norm: vector has a component along h");
}

double NormContext::theta(const Vector& v) const {
  require_in_m(v);
  const double norm = v.norm();
  if (norm == 0.0) throw ContractError("theta: zero vector");
  return space_.m2().project(v).norm() / norm;
}

double NormContext::norm_value(const Vector& v) const {
  require_in_m(v);
  const double norm = v.norm();
  if (norm == 0.0) throw ContractError("norm_value: zero vector");
  return norm * phi_.eval(space_.m2().project(v).norm() / norm).first;
}

double NormContext::fundamental_tensor(const Vector& U, const Vector& V) const {
  const Vector w = descent_vector(U);
  const double t = theta(U);
  return phi_.eval(t).first * w.dot(V);
}

Vector NormContext::descent_vector(const Vector& U) const {
  require_in_m(U);
  const Vector u1 = space_.m1().project(U);
  const Vector u2 = space_.m2().project(U);
  const double norm = U.norm();
  if (norm == 0.0) throw ContractError("descent_vector: zero vector");
  const double ratio = std::min(u1.norm(), u2.norm()) / norm;
  if (ratio < kThetaCut)
    throw ContractError(
        "descent_vector: component ratio at the boundary; use the Riemannian branch");
  const double t = u2.norm() / norm;
  const auto [phi, dphi] = phi_.eval(t);
  const double c1 = phi - t * dphi;
  const double c2 = phi - (t - 1.0 / t) * dphi;
  return c1 * u1 + c2 * u2;
}

}  // namespace goa2
