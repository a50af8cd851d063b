#ifndef GOA2_NORM_HPP
#define GOA2_NORM_HPP

#include "goa2/algebra.hpp"
#include "goa2/phi.hpp"

namespace goa2 {

/// A certified decomposition together with a profile phi: the norm
/// F(v) = |v| phi(|v2|/|v|) on m = m1 + m2, v2 the m2-component.
class NormContext {
 public:
  NormContext(DecomposedSpace space, PhiFunction phi)
      : space_(std::move(space)), phi_(std::move(phi)) {}

  const DecomposedSpace& space() const { return space_; }
  const PhiFunction& phi() const { return phi_; }

  /// |v2|/|v| for v in m.
  double theta(const Vector& v) const;

  /// F(v). Requires v != 0 and v in m (h-component below tolerance).
  double norm_value(const Vector& v) const;

  /// g_U(U, V) for U with both components nonzero (theta strictly interior):
  /// phi(t) < (phi - t phi') U1 + (phi - (t - 1/t) phi') U2, V >.
  /// Throws ContractError at the component boundary; the Riemannian-limit
  /// branch there is the plain inner product pairing, handled by callers.
  double fundamental_tensor(const Vector& U, const Vector& V) const;

  /// w = (phi - t phi') U1 + (phi - (t - 1/t) phi') U2, so that
  /// g_U(U, V) = phi(t) <w, V>. Both coefficients are positive by
  /// regularity. Requires theta strictly interior.
  Vector descent_vector(const Vector& U) const;

 private:
  void require_in_m(const Vector& v) const;

  DecomposedSpace space_;
  PhiFunction phi_;
};

}  // namespace goa2

#endif
