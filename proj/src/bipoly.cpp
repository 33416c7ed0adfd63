#include "bmv/bipoly.hpp"

#include "bmv/errors.hpp"

#include <sstream>

namespace bmv {

BiPoly::BiPoly(const Poly& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

BiPoly BiPoly::monomial(const Poly& c, int t_degree, int s_degree) {
  if (t_degree < 0 || s_degree < 0) throw InvalidExponent("negative degree in t or s");
  BiPoly q;
  if (!c.is_zero()) q.terms_.emplace(Exponents{t_degree, s_degree}, c);
  return q;
}

Poly BiPoly::coeff(int n, int m) const {
  auto it = terms_.find({n, m});
  return it == terms_.end() ? Poly() : it->second;
}

void BiPoly::add_term(const Exponents& e, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) { return *this = *this * other; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BiPoly operator-(BiPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

BiPoly pow(const BiPoly& q, int k) {
  if (k < 0) throw InvalidExponent("negative power " + std::to_string(k));
  BiPoly result(1);
  for (int i = 0; i < k; ++i) result *= q;
  return result;
}

Poly bipoly_coeff(const BiPoly& q, int n, int m) {
  if (n < 0 || m < 0) throw InvalidExponent("negative coefficient index");
  return q.coeff(n, m);
}

std::string to_string(const BiPoly& q) {
  if (q.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : q.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    if (e.first > 0) out << "t" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) out << "s" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& q) { return os << to_string(q); }

}  // namespace bmv
