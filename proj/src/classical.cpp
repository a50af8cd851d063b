#include "goa2/classical.hpp"

#include <cmath>

namespace goa2 {

namespace {
const std::complex<double> kI(0.0, 1.0);

CMatrix unit(int n, int r, int c) {
  CMatrix m = CMatrix::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}
}  // namespace

Matrix realify(const CMatrix& Z) {
  const int n = static_cast<int>(Z.rows());
  Matrix R(2 * n, 2 * n);
  const Matrix A = Z.real();
  const Matrix B = Z.imag();
  R.topLeftCorner(n, n) = A;
  R.topRightCorner(n, n) = -B;
  R.bottomLeftCorner(n, n) = B;
  R.bottomRightCorner(n, n) = A;
  return R;
}

std::vector<Matrix> so_generators(int n) {
  if (n < 2) throw ContractError("so(n): need n >= 2");
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix m = Matrix::Zero(n, n);
      m(i, j) = 1.0;
      m(j, i) = -1.0;
      gens.push_back(m);
    }
  }
  return gens;
}

std::vector<CMatrix> su_generators(int n) {
  if (n < 2) throw ContractError("su(n): need n >= 2");
  std::vector<CMatrix> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      gens.push_back(unit(n, i, j) - unit(n, j, i));
      gens.push_back(kI * (unit(n, i, j) + unit(n, j, i)));
    }
  }
  for (int k = 0; k + 1 < n; ++k)
    gens.push_back(kI * (unit(n, k, k) - unit(n, k + 1, k + 1)));
  return gens;
}

std::vector<CMatrix> u_generators(int n) {
  std::vector<CMatrix> gens;
  if (n == 1) {
    gens.push_back(kI * CMatrix::Identity(1, 1));
    return gens;
  }
  gens = su_generators(n);
  gens.push_back(kI * CMatrix::Identity(n, n));
  return gens;
}

std::vector<CMatrix> sp_position_generators(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (j >= n || i < 0) throw ContractError("sp position out of range");
  const int N = 2 * n;
  // X = [[A, B], [-conj(B), conj(A)]], A skew-Hermitian, B symmetric.
  auto from_A = [n, N](const CMatrix& A) {
    CMatrix X = CMatrix::Zero(N, N);
    X.topLeftCorner(n, n) = A;
    X.bottomRightCorner(n, n) = A.conjugate();
    return X;
  };
  auto from_B = [n, N](const CMatrix& B) {
    CMatrix X = CMatrix::Zero(N, N);
    X.topRightCorner(n, n) = B;
    X.bottomLeftCorner(n, n) = -B.conjugate();
    return X;
  };
  std::vector<CMatrix> gens;
  if (i == j) {
    gens.push_back(from_A(kI * unit(n, i, i)));
    gens.push_back(from_B(unit(n, i, i)));
    gens.push_back(from_B(kI * unit(n, i, i)));
  } else {
    gens.push_back(from_A(unit(n, i, j) - unit(n, j, i)));
    gens.push_back(from_A(kI * (unit(n, i, j) + unit(n, j, i))));
    gens.push_back(from_B(unit(n, i, j) + unit(n, j, i)));
    gens.push_back(from_B(kI * (unit(n, i, j) + unit(n, j, i))));
  }
  return gens;
}

std::vector<CMatrix> sp_generators(int n) {
  if (n < 1) throw ContractError("sp(n): need n >= 1");
  std::vector<CMatrix> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      auto pos = sp_position_generators(n, i, j);
      gens.insert(gens.end(), pos.begin(), pos.end());
    }
  }
  return gens;
}

Matrix embed_block(const Matrix& block, int size, int offset) {
  Matrix m = Matrix::Zero(size, size);
  m.block(offset, offset, block.rows(), block.cols()) = block;
  return m;
}

CMatrix embed_block(const CMatrix& block, int size, int offset) {
  CMatrix m = CMatrix::Zero(size, size);
  m.block(offset, offset, block.rows(), block.cols()) = block;
  return m;
}

AlgebraPtr make_so(int n, double product_scale) {
  return LieAlgebra::from_generators("so(" + std::to_string(n) + ")", so_generators(n),
                                     trace_product(product_scale), n * (n - 1) / 2);
}

AlgebraPtr make_su(int n, double product_scale) {
  std::vector<Matrix> gens;
  for (const CMatrix& g : su_generators(n)) gens.push_back(realify(g));
  return LieAlgebra::from_generators("su(" + std::to_string(n) + ")", gens,
                                     trace_product(product_scale), n * n - 1);
}

AlgebraPtr make_u(int n, double product_scale) {
  std::vector<Matrix> gens;
  for (const CMatrix& g : u_generators(n)) gens.push_back(realify(g));
  return LieAlgebra::from_generators("u(" + std::to_string(n) + ")", gens,
                                     trace_product(product_scale), n * n);
}

AlgebraPtr make_sp(int n, double product_scale) {
  std::vector<Matrix> gens;
  for (const CMatrix& g : sp_generators(n)) gens.push_back(realify(g));
  return LieAlgebra::from_generators("sp(" + std::to_string(n) + ")", gens,
                                     trace_product(product_scale), n * (2 * n + 1));
}

MatrixProduct block_trace_product(const std::vector<int>& block_sizes,
                                  const std::vector<double>& weights) {
  if (block_sizes.size() != weights.size())
    throw ContractError("block_trace_product: one weight per block required");
  for (double w : weights)
    if (w <= 0.0) throw ContractError("block_trace_product: weights must be positive");
  return [block_sizes, weights](const Matrix& X, const Matrix& Y) {
    double sum = 0.0;
    int offset = 0;
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
      const int s = block_sizes[i];
      sum -= weights[i] *
             (X.block(offset, 0, s, X.cols()) * Y.block(0, offset, Y.rows(), s))
                 .trace();
      offset += s;
    }
    return sum;
  };
}

AlgebraPtr direct_sum(const std::string& name, const std::vector<AlgebraPtr>& factors,
                      const std::vector<double>& weights) {
  if (factors.empty()) throw ContractError("direct_sum: no factors");
  if (!weights.empty() && weights.size() != factors.size())
    throw ContractError("direct_sum: one weight per factor required");
  int total = 0, expected = 0;
  std::vector<int> sizes;
  for (const AlgebraPtr& f : factors) {
    sizes.push_back(f->matrix_size());
    total += f->matrix_size();
    expected += f->dim();
  }
  std::vector<Matrix> gens;
  int offset = 0;
  for (const AlgebraPtr& f : factors) {
    for (int i = 0; i < f->dim(); ++i)
      gens.push_back(embed_block(f->basis_matrix(i), total, offset));
    offset += f->matrix_size();
  }
  MatrixProduct product =
      weights.empty() ? trace_product()
                      : block_trace_product(sizes, weights);
  return LieAlgebra::from_generators(name, gens, std::move(product), expected);
}

}  // namespace goa2
