#pragma once

#include "bmv/matrix.hpp"
#include "bmv/report.hpp"

#include <vector>

namespace bmv {

/// The pair A_x, B_x of 3x3 positive semidefinite matrices.
struct Family {
  Mat3 a;
  Mat3 b;
};

/// Rank-one projections of the normal form A = P + 2x U, B = 2x V + Q.
///
/// The unit vectors behind them carry 1/sqrt(2), so only the rational
/// projection matrices are stored.
struct ProjectionSet {
  RationalMat3 p;
  RationalMat3 u;
  RationalMat3 v;
  RationalMat3 q;
};

Family build_family();
ProjectionSet build_projections();

/// Exact checks of the normal form and of the full pairwise overlap table.
std::vector<Check> verify_normal_form();

/// tr(A^n B^m) = 2^(m-1) x^m + 2^(n-1) x^n + 2^(n+m-2) x^(n+m); n, m >= 1.
Poly clustered_trace_closed(int n, int m);

/// tr(A^n B^m) by repeated multiplication, the oracle for the closed form.
Poly clustered_trace_direct(int n, int m);

Mat3 family_commutator();
Poly commutator_frobenius_sq();

/// det(lambda I - M) coefficients {e1, e2, e3} of a family matrix.
std::array<Poly, 3> char_poly_of(const Mat3& m);

}  // namespace bmv
