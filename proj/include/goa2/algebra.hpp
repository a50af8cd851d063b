#ifndef GOA2_ALGEBRA_HPP
#define GOA2_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "goa2/common.hpp"

namespace goa2 {

/// Residual of one certified invariant, as reported by certify().
struct InvariantResidual {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

/// Bi-invariant inner product on d x d matrices.
using MatrixProduct = std::function<double(const Matrix&, const Matrix&)>;

/// The standard product scale * (-tr(XY)).
MatrixProduct trace_product(double scale = 1.0);

/// Compact real matrix Lie algebra with an orthonormal basis under a
/// bi-invariant inner product (default -tr(XY)), precomputed structure
/// constants and adjoint matrices of the basis elements.
///
/// Immutable after construction; share freely across threads.
class LieAlgebra {
 public:
  /// Builds the algebra spanned by `generators` (d x d real matrices, closed
  /// under commutator). The generators are orthonormalized under `product`;
  /// dependent inputs are dropped. If expected_dim >= 0 the resulting
  /// dimension must match.
  static std::shared_ptr<const LieAlgebra> from_generators(
      std::string name, const std::vector<Matrix>& generators,
      MatrixProduct product = trace_product(), int expected_dim = -1);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_size() const { return matrix_size_; }

  const Matrix& basis_matrix(int i) const { return basis_[i]; }
  /// Matrix of ad(b_i) in the basis: ad_basis(i)(k,j) = c[i][j][k].
  const Matrix& ad_basis(int i) const { return ad_[i]; }
  double structure_constant(int i, int j, int k) const { return ad_[i](k, j); }

  /// Lie bracket in coefficient coordinates.
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x) = [x, .] in the basis (n x n).
  Matrix ad(const Vector& x) const;
  /// Bi-invariant inner product; the basis is orthonormal, so this is the
  /// Euclidean dot product of coefficient vectors.
  double inner(const Vector& x, const Vector& y) const;

  /// Reassembles the d x d matrix of a coefficient vector.
  Matrix matrix_of(const Vector& x) const;
  /// Inner product of two d x d matrices under the algebra's product.
  double matrix_inner(const Matrix& X, const Matrix& Y) const;
  /// Expands a matrix over the basis. Throws ContractError if the matrix is
  /// not in the span to kTolAlgebra (relative to its norm).
  Vector coefficients_of(const Matrix& X) const;

  /// Runs the full invariant suite (skew bases, Gram identity, antisymmetry,
  /// Jacobi, bi-invariance, closure) and reports per-invariant residuals.
  std::vector<InvariantResidual> certify() const;

 private:
  LieAlgebra() = default;

  std::string name_;
  int matrix_size_ = 0;
  MatrixProduct product_;
  std::vector<Matrix> basis_;  // orthonormal, d x d each
  std::vector<Matrix> ad_;     // n matrices, n x n each
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Orthonormal subspace of a LieAlgebra, stored as an n x k coefficient
/// matrix whose columns are the subspace basis vectors.
class Subspace {
 public:
  Subspace() = default;
  /// Orthonormalizes `vectors` (modified Gram-Schmidt with one
  /// re-orthogonalization pass); vectors whose residual after projection is
  /// below kTolRank are dropped. An empty result is allowed.
  static Subspace from_span(AlgebraPtr algebra, const std::vector<Vector>& vectors);
  /// Same, from generator matrices expanded over the algebra basis.
  static Subspace from_matrices(AlgebraPtr algebra, const std::vector<Matrix>& matrices);
  /// The whole algebra as a subspace.
  static Subspace full(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  /// n x k matrix of basis columns.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(int i) const { return basis_.col(i); }

  /// Orthogonal projection onto the subspace, in ambient coordinates.
  Vector project(const Vector& x) const;
  /// Ambient vector from internal coordinates.
  Vector lift(const Vector& coords) const { return basis_ * coords; }
  /// Internal coordinates of (the projection of) an ambient vector.
  Vector coords(const Vector& x) const { return basis_.transpose() * x; }

  /// Max deviation of the Gram matrix from the identity.
  double orthonormality_defect() const;
  /// Max residual of [s_i, s_j] after projecting back onto the subspace;
  /// small values certify a subalgebra.
  double closure_residual() const;
  /// Max norm of project(bracket(x, s_i), complement of this subspace) over
  /// the given basis of `other`, i.e. how far [other, this] leaves `this`.
  double invariance_residual(const Subspace& other) const;

 private:
  AlgebraPtr algebra_;
  Matrix basis_;  // n x k, orthonormal columns
};

/// Coefficient-vector Lie bracket.
Vector bracket(const Vector& x, const Vector& y, const LieAlgebra& algebra);
/// Bi-invariant inner product of coefficient vectors.
double inner(const Vector& x, const Vector& y, const LieAlgebra& algebra);
/// Orthogonal projection onto a subspace.
Vector project(const Vector& x, const Subspace& subspace);
/// Orthonormalizes a set of coefficient vectors into a Subspace.
Subspace orthonormalize(const std::vector<Vector>& vectors, AlgebraPtr algebra);
/// Matrix (dim_to x dim_from) of z -> project(bracket(x, z), to) restricted
/// to `from`, in the subspace bases.
Matrix ad_matrix(const Vector& x, const Subspace& from, const Subspace& to);

/// Orthogonal complement of `inner_subspace` inside `outer` (both subspaces
/// of the same algebra; inner must be contained in outer).
Subspace orthogonal_complement(const Subspace& inner_subspace, const Subspace& outer);

/// Max norm of the component of [a_i, b_j] outside `target`, over the basis
/// pairs of `a` and `b`; certifies [a, b] in target.
double bracket_residual_off(const Subspace& a, const Subspace& b, const Subspace& target);

/// Reductive decomposition g = h + m1 + m2 with certified invariants.
/// When is_triple() holds, m1 plays the fiber summand m_F and m2 the base
/// summand m_B of a triple h in k in g (k = h + m1), with [m1, m2] in m2.
class DecomposedSpace {
 public:
  /// Certifies mutual orthogonality, dimension count, h subalgebra,
  /// reductivity of m1/m2, and detects the triple relation [m1,m2] in m2.
  /// Throws ConstructionError naming the first failed invariant.
  static DecomposedSpace build(std::string label, AlgebraPtr algebra, Subspace h,
                               Subspace m1, Subspace m2,
                               bool require_triple = false);

  const std::string& label() const { return label_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const Subspace& h() const { return h_; }
  const Subspace& m1() const { return m1_; }
  const Subspace& m2() const { return m2_; }
  /// m = m1 + m2 as one subspace (columns of m1 then m2).
  const Subspace& m() const { return m_; }
  bool is_triple() const { return is_triple_; }

  /// Same split with the two summands swapped (the triple flag is
  /// re-detected for the swapped order).
  DecomposedSpace swapped() const;

  /// Residuals of all certified invariants (for reports).
  std::vector<InvariantResidual> certify() const;

 private:
  std::string label_;
  AlgebraPtr algebra_;
  Subspace h_, m1_, m2_, m_;
  bool is_triple_ = false;
};

}  // namespace goa2

#endif
