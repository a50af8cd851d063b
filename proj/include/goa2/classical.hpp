#ifndef GOA2_CLASSICAL_HPP
#define GOA2_CLASSICAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "goa2/algebra.hpp"

namespace goa2 {

using CMatrix = Eigen::MatrixXcd;

/// Realification A + iB -> [[A, -B], [B, A]]. Skew-Hermitian matrices map to
/// real skew-symmetric ones, and the map is an algebra homomorphism.
Matrix realify(const CMatrix& Z);

/// Standard generators E_ij - E_ji (i < j) of so(n), n x n real.
std::vector<Matrix> so_generators(int n);
/// Skew-Hermitian traceless generators of su(n), complex n x n.
std::vector<CMatrix> su_generators(int n);
/// Skew-Hermitian generators of u(n) = su(n) + span{iI}.
std::vector<CMatrix> u_generators(int n);
/// Generators of sp(n) inside su(2n), in the block form [[A, B], [-conj(B), conj(A)]]
/// with A skew-Hermitian and B symmetric, grouped by quaternionic position.
std::vector<CMatrix> sp_generators(int n);
/// Generators of sp(n) supported on the quaternionic position (i, j) only
/// (three for a diagonal position, four off the diagonal).
std::vector<CMatrix> sp_position_generators(int n, int i, int j);

/// Embeds a block matrix at (offset, offset) of a size x size zero matrix.
Matrix embed_block(const Matrix& block, int size, int offset);
CMatrix embed_block(const CMatrix& block, int size, int offset);

AlgebraPtr make_so(int n, double product_scale = 1.0);
AlgebraPtr make_su(int n, double product_scale = 1.0);  // realified, 2n x 2n
AlgebraPtr make_u(int n, double product_scale = 1.0);   // realified
AlgebraPtr make_sp(int n, double product_scale = 1.0);  // realified, 4n x 4n

/// Inner product summing the factors' trace products with the given weights
/// over consecutive diagonal blocks of the stated sizes.
MatrixProduct block_trace_product(const std::vector<int>& block_sizes,
                                  const std::vector<double>& weights);

/// Block-diagonal direct sum of the factors. `weights` scales the
/// bi-invariant product factor by factor (default 1 per factor); the inner
/// product is the weighted blockwise sum.
AlgebraPtr direct_sum(const std::string& name, const std::vector<AlgebraPtr>& factors,
                      const std::vector<double>& weights = {});

}  // namespace goa2

#endif
