#ifndef GOA2_OCTONION_HPP
#define GOA2_OCTONION_HPP

#include <array>
#include <vector>

#include "goa2/common.hpp"

namespace goa2 {

/// Octonion multiplication table, Cayley-Dickson doubling of the quaternions
/// with basis e0 = 1, e1..e3 = i,j,k, e4 = l, e5..e7 = il, jl, kl.
/// table[i][j][k] is the e_k coefficient of e_i * e_j.
struct OctonionTable {
  std::array<std::array<std::array<double, 8>, 8>, 8> table{};

  Eigen::Matrix<double, 8, 1> multiply(const Eigen::Matrix<double, 8, 1>& x,
                                       const Eigen::Matrix<double, 8, 1>& y) const;
};

const OctonionTable& octonion_table();

/// 8x8 matrix of left multiplication by e_i on the octonions.
Matrix octonion_left_mult(int i);

/// 14-dimensional derivation algebra of the octonions as 7x7 skew matrices
/// acting on the imaginary units e1..e7 (null space of the derivation
/// constraint, extracted by singular value decomposition). Throws
/// ConstructionError if the null space dimension is not 14.
std::vector<Matrix> g2_derivation_basis();

/// 21-dimensional span of the products gamma_i * gamma_j (i < j) of the left
/// multiplications by imaginary units, as 8x8 skew matrices. Throws
/// ConstructionError if the span dimension is not 21.
std::vector<Matrix> spin7_basis();

}  // namespace goa2

#endif
