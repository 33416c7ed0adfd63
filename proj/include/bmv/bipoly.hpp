#pragma once

#include "bmv/poly.hpp"

#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace bmv {

/// Polynomial in the bookkeeping variables t, s with coefficients in Q[x].
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;  // (degree in t, degree in s)
  using Terms = std::map<Exponents, Poly>;

  BiPoly() = default;
  BiPoly(int c) : BiPoly(Poly(c)) {}  // NOLINT
  BiPoly(const Poly& c);              // NOLINT

  static BiPoly monomial(const Poly& c, int t_degree, int s_degree);
  static BiPoly t() { return monomial(Poly(1), 1, 0); }
  static BiPoly s() { return monomial(Poly(1), 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of t^n s^m; the zero polynomial when absent.
  Poly coeff(int n, int m) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(const Exponents& e, const Poly& c);

  Terms terms_;
};

BiPoly pow(const BiPoly& q, int k);

/// Same as q.coeff(n, m); n, m must be nonnegative.
Poly bipoly_coeff(const BiPoly& q, int n, int m);

std::string to_string(const BiPoly& q);
std::ostream& operator<<(std::ostream& os, const BiPoly& q);

}  // namespace bmv

namespace Eigen {
template <>
struct NumTraits<bmv::BiPoly> : GenericNumTraits<bmv::BiPoly> {
  using Real = bmv::BiPoly;
  using NonInteger = bmv::BiPoly;
  using Literal = bmv::BiPoly;
  using Nested = bmv::BiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 32,
    MulCost = 256
  };
  static constexpr int digits10() { return 0; }
};
}  // namespace Eigen
