#include "bmv/matrix.hpp"

namespace bmv {

RationalMat3 evaluate(const Mat3& m, const Rational& x0) {
  return m.unaryExpr([&](const Poly& p) { return eval(p, x0); });
}

Mat3 to_poly(const RationalMat3& m) {
  return m.unaryExpr([](const Rational& c) { return Poly(c); });
}

BiMat3 to_bipoly(const Mat3& m) {
  return m.unaryExpr([](const Poly& p) { return BiPoly(p); });
}

std::string to_string(const Mat3& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < 3; ++i) {
    s += i ? ", [" : "[";
    for (Eigen::Index j = 0; j < 3; ++j) s += (j ? ", " : "") + to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

bool is_psd_by_minors(const RationalMat3& m) {
  if (m != m.transpose()) return false;
  for (Eigen::Index i = 0; i < 3; ++i)
    if (m(i, i) < 0) return false;
  if (minor2(m, 0, 1) < 0 || minor2(m, 0, 2) < 0 || minor2(m, 1, 2) < 0) return false;
  return determinant(m) >= 0;
}

}  // namespace bmv
