#include "goa2/algebra.hpp"

#include <cmath>
#include <utility>

namespace goa2 {

namespace {

// Modified Gram-Schmidt with one re-orthogonalization pass. Columns whose
// residual drops below kTolRank times their original norm scale are removed.
Matrix mgs_orthonormalize(const std::vector<Vector>& vectors, int ambient) {
  std::vector<Vector> kept;
  kept.reserve(vectors.size());
  for (const Vector& v : vectors) {
    if (v.size() != ambient) throw ContractError("orthonormalize: dimension mismatch");
    Vector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& q : kept) w -= q.dot(w) * q;
    }
    const double scale = std::max(v.norm(), 1.0);
    if (w.norm() > kTolRank * scale) kept.push_back(w / w.norm());
  }
  Matrix basis(ambient, static_cast<int>(kept.size()));
  for (int i = 0; i < basis.cols(); ++i) basis.col(i) = kept[i];
  return basis;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

MatrixProduct trace_product(double scale) {
  if (scale <= 0.0) throw ContractError("trace_product: scale must be positive");
  return [scale](const Matrix& X, const Matrix& Y) {
    return -scale * (X * Y).trace();
  };
}

std::shared_ptr<const LieAlgebra> LieAlgebra::from_generators(
    std::string name, const std::vector<Matrix>& generators, MatrixProduct product,
    int expected_dim) {
  if (generators.empty()) throw ContractError("LieAlgebra: no generators");
  // The adjoint tables take dim^3 doubles; keep constructions at desk scale.
  if (generators.size() > 200)
    throw ContractError("LieAlgebra '" + name + "': " +
                        std::to_string(generators.size()) +
                        " generators exceed the desk-scale limit of 200");
  if (!product) product = trace_product();
  const int d = static_cast<int>(generators.front().rows());

  auto algebra = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  algebra->name_ = std::move(name);
  algebra->matrix_size_ = d;
  algebra->product_ = std::move(product);

  // Orthonormalize the generator matrices under the product, dropping
  // dependent ones.
  for (const Matrix& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw ContractError("LieAlgebra: generators of mixed sizes");
    if (max_abs(g + g.transpose()) > kTolAlgebra * std::max(1.0, max_abs(g)))
      throw ConstructionError("LieAlgebra '" + algebra->name_ +
                              "': generator is not skew-symmetric");
    Matrix w = g;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Matrix& b : algebra->basis_) w -= algebra->matrix_inner(w, b) * b;
    }
    const double norm = std::sqrt(std::max(algebra->matrix_inner(w, w), 0.0));
    const double scale = std::sqrt(std::max(algebra->matrix_inner(g, g), 1.0));
    if (norm > kTolRank * scale) algebra->basis_.push_back(w / norm);
  }
  const int n = algebra->dim();
  if (expected_dim >= 0 && n != expected_dim)
    throw ConstructionError("LieAlgebra '" + algebra->name_ + "': dimension " +
                            std::to_string(n) + ", expected " + std::to_string(expected_dim));

  // Structure constants, stored as the adjoint matrices of the basis:
  // ad(b_i)(k,j) = c[i][j][k] = <[b_i,b_j], b_k>. Antisymmetry in (i,j) is
  // mirrored exactly; closure against the matrix commutator is certified.
  algebra->ad_.assign(n, Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const Matrix comm = algebra->basis_[i] * algebra->basis_[j] -
                          algebra->basis_[j] * algebra->basis_[i];
      Matrix recon = Matrix::Zero(d, d);
      for (int k = 0; k < n; ++k) {
        const double c = algebra->matrix_inner(comm, algebra->basis_[k]);
        algebra->ad_[i](k, j) = c;
        algebra->ad_[j](k, i) = -c;
        recon += c * algebra->basis_[k];
      }
      if (max_abs(comm - recon) > kTolAlgebra)
        throw ConstructionError("LieAlgebra '" + algebra->name_ +
                                "': bracket closure failed at basis pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return algebra;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw ContractError("bracket: dimension mismatch");
  Vector z = Vector::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i] != 0.0) z.noalias() += x[i] * (ad_[i] * y);
  }
  return z;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim()) throw ContractError("ad: dimension mismatch");
  Matrix a = Matrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i] != 0.0) a.noalias() += x[i] * ad_[i];
  }
  return a;
}

double LieAlgebra::inner(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw ContractError("inner: dimension mismatch");
  return x.dot(y);
}

Matrix LieAlgebra::matrix_of(const Vector& x) const {
  if (x.size() != dim()) throw ContractError("matrix_of: dimension mismatch");
  Matrix m = Matrix::Zero(matrix_size_, matrix_size_);
  for (int i = 0; i < dim(); ++i) {
    if (x[i] != 0.0) m.noalias() += x[i] * basis_[i];
  }
  return m;
}

double LieAlgebra::matrix_inner(const Matrix& X, const Matrix& Y) const {
  return product_(X, Y);
}

Vector LieAlgebra::coefficients_of(const Matrix& X) const {
  if (X.rows() != matrix_size_ || X.cols() != matrix_size_)
    throw ContractError("coefficients_of: matrix size mismatch");
  Vector c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = matrix_inner(X, basis_[i]);
  const double defect = max_abs(X - matrix_of(c));
  if (defect > kTolAlgebra * std::max(1.0, max_abs(X)))
    throw ContractError("coefficients_of: matrix not in span of '" + name_ +
                        "' (residual " + std::to_string(defect) + ")");
  return c;
}

std::vector<InvariantResidual> LieAlgebra::certify() const {
  const int n = dim();
  std::vector<InvariantResidual> out;
  auto push = [&out](const std::string& name, double residual, double tol) {
    out.push_back({name, residual, residual < tol});
  };

  double skew = 0.0;
  for (const Matrix& b : basis_) skew = std::max(skew, max_abs(b + b.transpose()));
  push("basis skew-symmetry", skew, kTolAlgebra);

  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      gram(i, j) = gram(j, i) = matrix_inner(basis_[i], basis_[j]);
  push("gram identity", max_abs(gram - Matrix::Identity(n, n)), kTolAlgebra);

  // Antisymmetry is mirrored at construction, so it holds exactly;
  // bi-invariance amounts to total antisymmetry of c[i][j][k] in (j,k).
  double antisym = 0.0, biinv = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        antisym = std::max(antisym, std::abs(ad_[i](k, j) + ad_[j](k, i)));
        biinv = std::max(biinv, std::abs(ad_[i](k, j) + ad_[i](j, k)));
      }
    }
  }
  push("structure antisymmetry", antisym, kTolAlgebra);
  push("bi-invariance", biinv, kTolAlgebra);

  // Jacobi via the adjoint representation: [ad(b_i), ad(b_j)] = ad([b_i,b_j]).
  // The (l,k) entry of the residual matrix is the cyclic contraction of the
  // structure constants for the triple (i,j,k) in coordinate l.
  double jacobi = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      Matrix lhs = ad_[i] * ad_[j] - ad_[j] * ad_[i];
      for (int k = 0; k < n; ++k) {
        const double c = ad_[i](k, j);
        if (c != 0.0) lhs.noalias() -= c * ad_[k];
      }
      jacobi = std::max(jacobi, max_abs(lhs));
    }
  }
  push("jacobi", jacobi, kTolAlgebra);

  double closure = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const Matrix comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      Matrix recon = Matrix::Zero(matrix_size_, matrix_size_);
      for (int k = 0; k < n; ++k) recon += ad_[i](k, j) * basis_[k];
      closure = std::max(closure, max_abs(comm - recon));
    }
  }
  push("bracket closure", closure, kTolAlgebra);
  return out;
}

Subspace Subspace::from_span(AlgebraPtr algebra, const std::vector<Vector>& vectors) {
  if (!algebra) throw ContractError("Subspace: null algebra");
  Subspace s;
  s.algebra_ = std::move(algebra);
  s.basis_ = mgs_orthonormalize(vectors, s.algebra_->dim());
  return s;
}

Subspace Subspace::from_matrices(AlgebraPtr algebra, const std::vector<Matrix>& matrices) {
  std::vector<Vector> coeffs;
  coeffs.reserve(matrices.size());
  for (const Matrix& m : matrices) coeffs.push_back(algebra->coefficients_of(m));
  return from_span(std::move(algebra), coeffs);
}

Subspace Subspace::full(AlgebraPtr algebra) {
  Subspace s;
  s.basis_ = Matrix::Identity(algebra->dim(), algebra->dim());
  s.algebra_ = std::move(algebra);
  return s;
}

Vector Subspace::project(const Vector& x) const {
  if (x.size() != ambient_dim()) throw ContractError("project: dimension mismatch");
  return basis_ * (basis_.transpose() * x);
}

double Subspace::orthonormality_defect() const {
  if (dim() == 0) return 0.0;
  Matrix gram = basis_.transpose() * basis_;
  return max_abs(gram - Matrix::Identity(dim(), dim()));
}

double Subspace::closure_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < i; ++j) {
      Vector br = algebra_->bracket(basis_.col(i), basis_.col(j));
      worst = std::max(worst, (br - project(br)).norm());
    }
  }
  return worst;
}

double Subspace::invariance_residual(const Subspace& other) const {
  double worst = 0.0;
  for (int i = 0; i < other.dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      Vector br = algebra_->bracket(other.basis_.col(i), basis_.col(j));
      worst = std::max(worst, (br - project(br)).norm());
    }
  }
  return worst;
}

Vector bracket(const Vector& x, const Vector& y, const LieAlgebra& algebra) {
  return algebra.bracket(x, y);
}

double inner(const Vector& x, const Vector& y, const LieAlgebra& algebra) {
  return algebra.inner(x, y);
}

Vector project(const Vector& x, const Subspace& subspace) { return subspace.project(x); }

Subspace orthonormalize(const std::vector<Vector>& vectors, AlgebraPtr algebra) {
  return Subspace::from_span(std::move(algebra), vectors);
}

Matrix ad_matrix(const Vector& x, const Subspace& from, const Subspace& to) {
  if (from.algebra().get() != to.algebra().get())
    throw ContractError("ad_matrix: subspaces of different algebras");
  const Matrix a = from.algebra()->ad(x);
  return to.basis().transpose() * (a * from.basis());
}

double bracket_residual_off(const Subspace& a, const Subspace& b, const Subspace& target) {
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      Vector br = a.algebra()->bracket(a.basis_vector(i), b.basis_vector(j));
      worst = std::max(worst, (br - target.project(br)).norm());
    }
  }
  return worst;
}

Subspace orthogonal_complement(const Subspace& inner_subspace, const Subspace& outer) {
  if (inner_subspace.algebra().get() != outer.algebra().get())
    throw ContractError("orthogonal_complement: subspaces of different algebras");
  std::vector<Vector> residuals;
  for (int i = 0; i < outer.dim(); ++i) {
    Vector v = outer.basis_vector(i);
    residuals.push_back(v - inner_subspace.project(v));
  }
  Subspace c = Subspace::from_span(outer.algebra(), residuals);
  if (c.dim() != outer.dim() - inner_subspace.dim())
    throw ConstructionError("orthogonal_complement: unexpected dimension " +
                            std::to_string(c.dim()));
  return c;
}

DecomposedSpace DecomposedSpace::build(std::string label, AlgebraPtr algebra, Subspace h,
                                       Subspace m1, Subspace m2, bool require_triple) {
  DecomposedSpace s;
  s.label_ = std::move(label);
  s.algebra_ = std::move(algebra);
  s.h_ = std::move(h);
  s.m1_ = std::move(m1);
  s.m2_ = std::move(m2);

  std::vector<Vector> m_cols;
  for (int i = 0; i < s.m1_.dim(); ++i) m_cols.push_back(s.m1_.basis_vector(i));
  for (int i = 0; i < s.m2_.dim(); ++i) m_cols.push_back(s.m2_.basis_vector(i));
  s.m_ = Subspace::from_span(s.algebra_, m_cols);

  for (const InvariantResidual& inv : s.certify()) {
    if (inv.name == "triple relation [m1,m2] in m2") {
      s.is_triple_ = inv.pass;
      if (require_triple && !inv.pass)
        throw ConstructionError(s.label_ + ": invariant '" + inv.name +
                                "' failed (residual " + std::to_string(inv.residual) + ")");
      continue;
    }
    if (!inv.pass)
      throw ConstructionError(s.label_ + ": invariant '" + inv.name +
                              "' failed (residual " + std::to_string(inv.residual) + ")");
  }
  return s;
}

DecomposedSpace DecomposedSpace::swapped() const {
  return build(label_ + " (swapped)", algebra_, h_, m2_, m1_, false);
}

std::vector<InvariantResidual> DecomposedSpace::certify() const {
  std::vector<InvariantResidual> out;
  auto push = [&out](const std::string& name, double residual) {
    out.push_back({name, residual, residual < kTolAlgebra});
  };

  push("h orthonormality", h_.orthonormality_defect());
  push("m1 orthonormality", m1_.orthonormality_defect());
  push("m2 orthonormality", m2_.orthonormality_defect());

  double ortho = 0.0;
  if (h_.dim() > 0 && m1_.dim() > 0)
    ortho = std::max(ortho, max_abs(h_.basis().transpose() * m1_.basis()));
  if (h_.dim() > 0 && m2_.dim() > 0)
    ortho = std::max(ortho, max_abs(h_.basis().transpose() * m2_.basis()));
  if (m1_.dim() > 0 && m2_.dim() > 0)
    ortho = std::max(ortho, max_abs(m1_.basis().transpose() * m2_.basis()));
  push("mutual orthogonality", ortho);

  const int total = h_.dim() + m1_.dim() + m2_.dim();
  push("dimension count", total == algebra_->dim() ? 0.0 : 1.0);

  push("h subalgebra", h_.closure_residual());
  push("reductivity [h,m1] in m1", m1_.invariance_residual(h_));
  push("reductivity [h,m2] in m2", m2_.invariance_residual(h_));
  push("triple relation [m1,m2] in m2", m2_.invariance_residual(m1_));
  return out;
}

}  // namespace goa2
