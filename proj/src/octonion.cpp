#include "goa2/octonion.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace goa2 {

namespace {

using Quat = Eigen::Matrix<double, 4, 1>;

Quat quat_mul(const Quat& a, const Quat& b) {
  Quat c;
  c[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  c[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  c[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  c[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  return c;
}

Quat quat_conj(const Quat& a) { return Quat(a[0], -a[1], -a[2], -a[3]); }

OctonionTable build_table() {
  OctonionTable t;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      // (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)) on quaternion pairs.
      Quat a = Quat::Zero(), b = Quat::Zero(), c = Quat::Zero(), d = Quat::Zero();
      if (i < 4) a[i] = 1.0; else b[i - 4] = 1.0;
      if (j < 4) c[j] = 1.0; else d[j - 4] = 1.0;
      const Quat first = quat_mul(a, c) - quat_mul(quat_conj(d), b);
      const Quat second = quat_mul(d, a) + quat_mul(b, quat_conj(c));
      for (int k = 0; k < 4; ++k) {
        t.table[i][j][k] = first[k];
        t.table[i][j][k + 4] = second[k];
      }
    }
  }
  return t;
}

}  // namespace

Eigen::Matrix<double, 8, 1> OctonionTable::multiply(
    const Eigen::Matrix<double, 8, 1>& x, const Eigen::Matrix<double, 8, 1>& y) const {
  Eigen::Matrix<double, 8, 1> z = Eigen::Matrix<double, 8, 1>::Zero();
  for (int i = 0; i < 8; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      if (y[j] == 0.0) continue;
      for (int k = 0; k < 8; ++k) z[k] += x[i] * y[j] * table[i][j][k];
    }
  }
  return z;
}

const OctonionTable& octonion_table() {
  static const OctonionTable t = build_table();
  return t;
}

Matrix octonion_left_mult(int i) {
  const OctonionTable& t = octonion_table();
  Matrix m(8, 8);
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k) m(k, j) = t.table[i][j][k];
  return m;
}

std::vector<Matrix> g2_derivation_basis() {
  const OctonionTable& t = octonion_table();
  // Unknown D is 7x7 (action on e1..e7, with D(e0) = 0), flattened
  // column-major: D(a,b) with a,b in 1..7 -> column index (b-1)*7 + (a-1).
  // One row per component of D(e_i e_j) - D(e_i)e_j - e_i D(e_j).
  const int unknowns = 49;
  Matrix constraints = Matrix::Zero(28 * 8, unknowns);
  int row = 0;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = 0; k < 8; ++k) {
        // D(e_i e_j): imaginary components of the product feed through D.
        for (int p = 1; p <= 7; ++p) {
          const double coeff = t.table[i][j][p];
          if (coeff != 0.0 && k >= 1) constraints(row + k, (p - 1) * 7 + (k - 1)) += coeff;
        }
        // -D(e_i) e_j = -sum_a D(a,i) e_a e_j.
        for (int a = 1; a <= 7; ++a)
          constraints(row + k, (i - 1) * 7 + (a - 1)) -= t.table[a][j][k];
        // -e_i D(e_j).
        for (int a = 1; a <= 7; ++a)
          constraints(row + k, (j - 1) * 7 + (a - 1)) -= t.table[i][a][k];
      }
      row += 8;
    }
  }

  Eigen::JacobiSVD<Matrix> svd(constraints, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = kTolRank * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  const int nullity = unknowns - rank;
  if (nullity != 14)
    throw ConstructionError("g2 derivation null space has dimension " +
                            std::to_string(nullity) + ", expected 14");

  std::vector<Matrix> basis;
  for (int c = rank; c < unknowns; ++c) {
    Vector flat = svd.matrixV().col(c);
    Matrix d(7, 7);
    for (int b = 0; b < 7; ++b)
      for (int a = 0; a < 7; ++a) d(a, b) = flat[b * 7 + a];
    basis.push_back(d);
  }
  return basis;
}

std::vector<Matrix> spin7_basis() {
  std::vector<Matrix> gamma;
  for (int i = 1; i <= 7; ++i) gamma.push_back(octonion_left_mult(i));
  std::vector<Matrix> basis;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) basis.push_back(gamma[i] * gamma[j]);

  // Rank certification of the span via the Gram matrix of the flattened
  // products under the Frobenius product.
  Matrix flat(64, 21);
  for (int c = 0; c < 21; ++c)
    flat.col(c) = Eigen::Map<const Vector>(basis[c].data(), 64);
  Eigen::JacobiSVD<Matrix> svd(flat);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > kTolRank * sv[0]) ++rank;
  if (rank != 21)
    throw ConstructionError("spin(7) span has dimension " + std::to_string(rank) +
                            ", expected 21");
  return basis;
}

}  // namespace goa2
