#include "bmv/poly.hpp"

#include "bmv/errors.hpp"

#include <sstream>

namespace bmv {

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidExponent("negative degree " + std::to_string(degree));
  Poly p;
  if (c != 0) p.terms_.emplace(degree, c);
  return p;
}

Poly Poly::from_terms(std::initializer_list<std::pair<int, Rational>> terms) {
  Poly p;
  for (const auto& [d, c] : terms) p += monomial(c, d);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int Poly::degree() const {
  if (terms_.empty()) throw ZeroPolynomial("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational Poly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(int degree, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [d, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  return r;
}

Poly operator-(Poly a) {
  for (auto& [d, c] : a.terms_) c = -c;
  return a;
}

Poly scale(const Poly& p, const Rational& c) { return p * c; }

Poly pow(const Poly& p, int k) {
  if (k < 0) throw InvalidExponent("negative power " + std::to_string(k));
  Poly result(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Rational eval(const Poly& p, const Rational& x0) {
  // Horner over the sparse terms, highest degree first.
  Rational acc = 0;
  int current = p.is_zero() ? 0 : p.degree();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (; current > it->first; --current) acc *= x0;
    acc += it->second;
  }
  for (; current > 0; --current) acc *= x0;
  return acc;
}

Valuation valuation(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("valuation of the zero polynomial");
  const auto& [d, c] = *p.terms().begin();
  return {d, c};
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool integral = boost::multiprecision::denominator(mag) == 1;
    if (d == 0) {
      out << to_display(mag);
      continue;
    }
    if (mag != 1) out << (integral ? to_display(mag) : "(" + to_display(mag) + ")");
    out << "x";
    if (d != 1) out << "^" << d;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace bmv
