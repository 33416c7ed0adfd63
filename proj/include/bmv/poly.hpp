#pragma once

#include "bmv/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <ostream>
#include <string>

namespace bmv {

/// Sparse univariate polynomial in x over the rationals.
///
/// Terms are a degree -> coefficient map that never stores a zero coefficient,
/// so the zero polynomial is the empty map and equality is structural.
class Poly {
 public:
  using Terms = std::map<int, Rational>;

  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT: Eigen builds Scalar(0), Scalar(1)
  Poly(const Rational& c);            // NOLINT

  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(Rational(1), 1); }
  /// Builds from (degree, coefficient) pairs, summing repeats and dropping zeros.
  static Poly from_terms(std::initializer_list<std::pair<int, Rational>> terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Highest degree; throws ZeroPolynomial for the zero polynomial.
  int degree() const;
  Rational coeff(int degree) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(int degree, const Rational& c);

  Terms terms_;
};

Poly scale(const Poly& p, const Rational& c);
Poly pow(const Poly& p, int k);
Rational eval(const Poly& p, const Rational& x0);

struct Valuation {
  int degree;
  Rational coefficient;
};

/// Lowest degree with a nonzero coefficient, and that coefficient.
Valuation valuation(const Poly& p);

/// Readable form, e.g. "32x^5 + 256x^10" or "(5/126)x^4 + ...".
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bmv

namespace Eigen {
template <>
struct NumTraits<bmv::Poly> : GenericNumTraits<bmv::Poly> {
  using Real = bmv::Poly;
  using NonInteger = bmv::Poly;
  using Literal = bmv::Poly;
  using Nested = bmv::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
  static constexpr int digits10() { return 0; }
};
}  // namespace Eigen
