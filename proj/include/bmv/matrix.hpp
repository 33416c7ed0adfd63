#pragma once

#include "bmv/bipoly.hpp"
#include "bmv/poly.hpp"
#include "bmv/rational.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <array>
#include <string>

namespace bmv {

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using Mat3 = Matrix3<Poly>;          ///< entries in Q[x]
using RationalMat3 = Matrix3<Rational>;
using BiMat3 = Matrix3<BiPoly>;      ///< entries in Q[x][t, s]

template <typename Scalar>
bool is_zero(const Matrix3<Scalar>& m) {
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

template <typename Scalar>
Scalar trace(const Matrix3<Scalar>& m) {
  return m(0, 0) + m(1, 1) + m(2, 2);
}

template <typename Scalar>
Scalar minor2(const Matrix3<Scalar>& m, Eigen::Index i, Eigen::Index j) {
  return m(i, i) * m(j, j) - m(i, j) * m(j, i);
}

/// Cofactor expansion along the first row; division free.
template <typename Scalar>
Scalar determinant(const Matrix3<Scalar>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// {e1, e2, e3} with det(lambda I - m) = lambda^3 - e1 lambda^2 + e2 lambda - e3.
template <typename Scalar>
std::array<Scalar, 3> char_poly_coefficients(const Matrix3<Scalar>& m) {
  return {trace(m), minor2(m, 0, 1) + minor2(m, 0, 2) + minor2(m, 1, 2), determinant(m)};
}

/// m^k by repeated left-to-right multiplication (k >= 0).
template <typename Scalar>
Matrix3<Scalar> power(const Matrix3<Scalar>& m, int k) {
  Matrix3<Scalar> result = Matrix3<Scalar>::Identity();
  for (int i = 0; i < k; ++i) result = (result * m).eval();
  return result;
}

template <typename Scalar>
Matrix3<Scalar> commutator(const Matrix3<Scalar>& a, const Matrix3<Scalar>& b) {
  return a * b - b * a;
}

/// Sum of squared entries.
template <typename Scalar>
Scalar frobenius_sq(const Matrix3<Scalar>& m) {
  Scalar sum(0);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) sum += m(i, j) * m(i, j);
  return sum;
}

RationalMat3 evaluate(const Mat3& m, const Rational& x0);
Mat3 to_poly(const RationalMat3& m);
BiMat3 to_bipoly(const Mat3& m);

/// Positive semidefiniteness of a symmetric rational matrix via all seven
/// principal minors being nonnegative.
/// "[[1, 0, 0], [0, x, -x], [0, -x, x]]"
std::string to_string(const Mat3& m);

bool is_psd_by_minors(const RationalMat3& m);

}  // namespace bmv
