#include "bmv/family.hpp"

#include "bmv/errors.hpp"

#include <string>
#include <utility>

namespace bmv {

namespace {

Rational half() { return Rational(1) / 2; }

std::string matrix_string(const Mat3& m) { return to_string(m); }

}  // namespace

Family build_family() {
  const Poly x = Poly::x();
  Family f;
  f.a << Poly(1), Poly(0), Poly(0),
         Poly(0), x, -x,
         Poly(0), -x, x;
  f.b << x, -x, Poly(0),
         -x, x, Poly(0),
         Poly(0), Poly(0), Poly(1);
  return f;
}

ProjectionSet build_projections() {
  const Rational h = half();
  ProjectionSet s;
  s.p << 1, 0, 0,
         0, 0, 0,
         0, 0, 0;
  s.u << 0, 0, 0,
         0, h, -h,
         0, -h, h;
  s.v << h, -h, 0,
         -h, h, 0,
         0, 0, 0;
  s.q << 0, 0, 0,
         0, 0, 0,
         0, 0, 1;
  return s;
}

std::vector<Check> verify_normal_form() {
  const Family f = build_family();
  const ProjectionSet s = build_projections();
  const Poly eps = scale(Poly::x(), 2);
  const Mat3 p = to_poly(s.p), u = to_poly(s.u), v = to_poly(s.v), q = to_poly(s.q);
  const Mat3 zero = Mat3::Zero();

  std::vector<Check> checks;
  checks.push_back(make_check("A_x = P + 2x U", matrix_string(f.a),
                              matrix_string(p + u.unaryExpr([&](const Poly& e) { return e * eps; }))));
  checks.push_back(make_check("B_x = 2x V + Q", matrix_string(f.b),
                              matrix_string(v.unaryExpr([&](const Poly& e) { return e * eps; }) + q)));

  const std::pair<const char*, const RationalMat3*> named[] = {
      {"P", &s.p}, {"U", &s.u}, {"V", &s.v}, {"Q", &s.q}};
  for (const auto& [name, r] : named) {
    const std::string n(name);
    checks.push_back(make_check(n + " idempotent", true, (*r) * (*r) == *r));
    checks.push_back(make_check(n + " symmetric", true, r->transpose() == *r));
    checks.push_back(make_check("tr(" + n + ")", Rational(1), trace(*r)));
  }

  // Orthogonal pairs: the product vanishes in both orders.
  const std::pair<int, int> orthogonal[] = {{0, 1}, {1, 0}, {0, 3}, {3, 0}, {2, 3}, {3, 2}};
  for (const auto& [i, j] : orthogonal) {
    const std::string label = std::string(named[i].first) + named[j].first + " = 0";
    checks.push_back(make_check(label, matrix_string(zero),
                                matrix_string(to_poly((*named[i].second) * (*named[j].second)))));
  }
  checks.push_back(make_check("tr(PV)", half(), trace((s.p * s.v).eval())));
  checks.push_back(make_check("tr(UQ)", half(), trace((s.u * s.q).eval())));
  checks.push_back(make_check("tr(UV)", Rational(1) / 4, trace((s.u * s.v).eval())));
  return checks;
}

Poly clustered_trace_closed(int n, int m) {
  if (n < 1 || m < 1)
    throw InvalidExponent("clustered trace needs n, m >= 1 (got " + std::to_string(n) + ", " +
                          std::to_string(m) + ")");
  return Poly::monomial(Rational(pow2(m - 1)), m) + Poly::monomial(Rational(pow2(n - 1)), n) +
         Poly::monomial(Rational(pow2(n + m - 2)), n + m);
}

Poly clustered_trace_direct(int n, int m) {
  const Family f = build_family();
  return trace((power(f.a, n) * power(f.b, m)).eval());
}

Mat3 family_commutator() {
  const Family f = build_family();
  return commutator(f.a, f.b);
}

Poly commutator_frobenius_sq() { return frobenius_sq(family_commutator()); }

std::array<Poly, 3> char_poly_of(const Mat3& m) { return char_poly_coefficients(m); }

}  // namespace bmv
