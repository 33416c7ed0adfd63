#include "bmv/average.hpp"

#include "bmv/errors.hpp"
#include "bmv/family.hpp"
#include "bmv/words.hpp"

#include <array>
#include <map>
#include <mutex>
#include <thread>

namespace bmv {

std::string to_string(EnsembleMethod m) {
  return m == EnsembleMethod::word_sum ? "word_sum" : "newton";
}

EnsembleResult p_word_sum(int n, int m, const WordSumOptions& options) {
  if (n < 1 || m < 1) throw RangeError("p_{n,m} needs n, m >= 1");
  if (n + m > Word::kMaxLength) throw ComplexityGuard("words longer than 64 letters");
  const Integer count = binomial(n + m, n);
  if (count > options.max_words)
    throw ComplexityGuard("binomial(" + std::to_string(n + m) + ", " + std::to_string(n) +
                          ") = " + count.str() + " words exceeds cap " +
                          std::to_string(options.max_words));

  const WordEnumeration words(n, m);
  Poly total;
  std::mutex merge;
  auto sweep = [&](std::uint64_t first, std::uint64_t last) {
    Poly partial;
    words.for_each(first, last, [&](const Word& w) { partial += word_trace(w); });
    std::lock_guard lock(merge);
    total += partial;
  };
  const auto ranges = words.partition(std::max(options.threads, 1u));
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 1; i < ranges.size(); ++i)
      workers.emplace_back(sweep, ranges[i].first, ranges[i].second);
    sweep(ranges[0].first, ranges[0].second);
  }
  return {n, m, scale(total, make_rational(1, count)), EnsembleMethod::word_sum, count};
}

namespace {

BiPoly u_sym() { return BiPoly::t() + BiPoly::s(); }
BiPoly v_sym() { return BiPoly::t() * BiPoly::t() + BiPoly::s() * BiPoly::s(); }
BiPoly w_sym() { return BiPoly::t() * BiPoly::s(); }

const std::array<BiPoly, 3>& elementary() {
  static const std::array<BiPoly, 3> e = [] {
    const Family f = build_family();
    const BiMat3 m = to_bipoly(f.a) * BiPoly::t() + to_bipoly(f.b) * BiPoly::s();
    return char_poly_coefficients(m);
  }();
  return e;
}

}  // namespace

CharPolyData char_poly_data() {
  CharPolyData d;
  const auto& e = elementary();
  d.e1 = e[0];
  d.e2 = e[1];
  d.e3 = e[2];
  const Poly x = Poly::x();
  d.alpha = scale(x, 2) + Poly(1);
  d.beta = Poly::from_terms({{2, 3}, {1, 2}, {0, 1}});
  d.delta = scale(x, 2);
  d.gamma = x * (x + Poly(1));
  const BiPoly e1 = BiPoly(d.alpha) * u_sym();
  const BiPoly e2 = BiPoly(d.delta) * v_sym() + BiPoly(d.beta) * w_sym();
  const BiPoly e3 = BiPoly(d.gamma) * u_sym() * w_sym();
  d.factored_forms_agree = e1 == d.e1 && e2 == d.e2 && e3 == d.e3;
  return d;
}

BiPoly power_sum_newton(int k) {
  if (k < 0) throw InvalidExponent("power sum index must be >= 0");
  const auto& [e1, e2, e3] = elementary();
  std::vector<BiPoly> a{BiPoly(3), e1, e1 * e1 - e2 - e2};
  for (int j = 3; j <= k; ++j) a.push_back(e1 * a[j - 1] - e2 * a[j - 2] + e3 * a[j - 3]);
  return a[static_cast<std::size_t>(k)];
}

EnsembleResult p_newton(int n, int m) {
  if (n < 1 || m < 1) throw RangeError("p_{n,m} needs n, m >= 1");
  const Integer count = binomial(n + m, n);
  const Poly coeff = bipoly_coeff(power_sum_newton(n + m), n, m);
  return {n, m, scale(coeff, make_rational(1, count)), EnsembleMethod::newton, count};
}

Rational coeff_extract_uvw(int a, int b, int c, int n, int m) {
  if (a < 0 || b < 0 || c < 0 || n < 0 || m < 0)
    throw RangeError("coefficient extraction needs nonnegative exponents");
  if (a + 2 * b + 2 * c != n + m)
    throw DegreeMismatch("a + 2b + 2c = " + std::to_string(a + 2 * b + 2 * c) +
                         " but n + m = " + std::to_string(n + m));
  Integer total = 0;
  for (int j = 0; j <= b; ++j) total += binomial(b, j) * binomial(a, n - c - 2 * j);
  return Rational(total);
}

namespace {

// [t^5 s^5] u^u_power (delta v + beta w)^pair_power (gamma w)^gamma_power, as
// integer coefficients of delta^i beta^j gamma^l.
struct ExtractionIdentity {
  std::string name;
  int u_power;
  int pair_power;
  int gamma_power;
  std::map<std::array<int, 3>, long> rhs;
};

const std::vector<ExtractionIdentity>& extraction_identities() {
  static const std::vector<ExtractionIdentity> ids = {
      {"u^10", 10, 0, 0, {{{0, 0, 0}, 252}}},
      {"u^8 (dv+bw)", 8, 1, 0, {{{1, 0, 0}, 112}, {{0, 1, 0}, 70}}},
      {"u^8 gw", 8, 0, 1, {{{0, 0, 1}, 70}}},
      {"u^6 (dv+bw)^2", 6, 2, 0, {{{2, 0, 0}, 52}, {{1, 1, 0}, 60}, {{0, 2, 0}, 20}}},
      {"u^6 (dv+bw) gw", 6, 1, 1, {{{1, 0, 1}, 30}, {{0, 1, 1}, 20}}},
      {"u^4 (dv+bw)^3", 4, 3, 0,
       {{{3, 0, 0}, 24}, {{2, 1, 0}, 42}, {{1, 2, 0}, 24}, {{0, 3, 0}, 6}}},
      {"u^6 (gw)^2", 6, 0, 2, {{{0, 0, 2}, 20}}},
      {"u^4 (dv+bw)^2 gw", 4, 2, 1, {{{2, 0, 1}, 14}, {{1, 1, 1}, 16}, {{0, 2, 1}, 6}}},
      {"u^2 (dv+bw)^4", 2, 4, 0,
       {{{4, 0, 0}, 12}, {{3, 1, 0}, 24}, {{2, 2, 0}, 24}, {{1, 3, 0}, 8}, {{0, 4, 0}, 2}}},
      {"u^4 (dv+bw) (gw)^2", 4, 1, 2, {{{1, 0, 2}, 8}, {{0, 1, 2}, 6}}},
      {"u^2 (dv+bw)^3 gw", 2, 3, 1,
       {{{3, 0, 1}, 6}, {{2, 1, 1}, 12}, {{1, 2, 1}, 6}, {{0, 3, 1}, 2}}},
      {"u^4 (gw)^3", 4, 0, 3, {{{0, 0, 3}, 6}}},
      {"(dv+bw)^5", 0, 5, 0, {{{4, 1, 0}, 30}, {{2, 3, 0}, 20}, {{0, 5, 0}, 1}}},
      {"u^2 (dv+bw)^2 (gw)^2", 2, 2, 2, {{{2, 0, 2}, 4}, {{1, 1, 2}, 4}, {{0, 2, 2}, 2}}},
  };
  return ids;
}

std::string monomial_table(const std::map<std::array<int, 3>, Integer>& table) {
  std::string s;
  for (const auto& [e, c] : table) {
    if (!s.empty()) s += " + ";
    s += c.str();
    const char* names[3] = {"d", "b", "g"};
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0) s += std::string(names[i]) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return s.empty() ? "0" : s;
}

Poly substitute(const std::map<std::array<int, 3>, Integer>& table, const CharPolyData& d) {
  Poly sum;
  for (const auto& [e, c] : table)
    sum += scale(pow(d.delta, e[0]) * pow(d.beta, e[1]) * pow(d.gamma, e[2]), Rational(c));
  return sum;
}

std::string truncated(const std::string& s) {
  return s.size() <= 120 ? s : s.substr(0, 117) + "...";
}

}  // namespace

std::vector<Check> verify_newton10_hardcoded() {
  std::vector<Check> checks;
  const CharPolyData d = char_poly_data();
  const BiPoly &e1 = d.e1, &e2 = d.e2, &e3 = d.e3;

  const BiPoly recurrence = power_sum_newton(10);
  const BiPoly hardcoded =
      pow(e1, 10) - BiPoly(10) * pow(e1, 8) * e2 + BiPoly(10) * pow(e1, 7) * e3 +
      BiPoly(35) * pow(e1, 6) * pow(e2, 2) - BiPoly(60) * pow(e1, 5) * e2 * e3 -
      BiPoly(50) * pow(e1, 4) * pow(e2, 3) + BiPoly(25) * pow(e1, 4) * pow(e3, 2) +
      BiPoly(100) * pow(e1, 3) * pow(e2, 2) * e3 + BiPoly(25) * pow(e1, 2) * pow(e2, 4) -
      BiPoly(60) * pow(e1, 2) * e2 * pow(e3, 2) - BiPoly(40) * e1 * pow(e2, 3) * e3 +
      BiPoly(10) * e1 * pow(e3, 3) - BiPoly(2) * pow(e2, 5) + BiPoly(15) * pow(e2, 2) * pow(e3, 2);
  checks.push_back({"degree-10 Newton identity = three-term recurrence",
                    truncated(to_string(recurrence)), truncated(to_string(hardcoded)),
                    recurrence == hardcoded});

  const BiPoly u = u_sym(), v = v_sym(), w = w_sym();
  for (const auto& id : extraction_identities()) {
    // Integer coefficients by the binomial extraction rule.
    std::map<std::array<int, 3>, Integer> by_rule;
    for (int i = 0; i <= id.pair_power; ++i) {
      const Rational c =
          Rational(binomial(id.pair_power, i)) *
          coeff_extract_uvw(id.u_power, i, id.pair_power - i + id.gamma_power, 5, 5);
      if (c != 0) by_rule[{i, id.pair_power - i, id.gamma_power}] += boost::multiprecision::numerator(c);
    }
    std::map<std::array<int, 3>, Integer> expected;
    for (const auto& [e, c] : id.rhs) expected[e] = c;
    checks.push_back(make_check("[t^5 s^5] " + id.name + " coefficients", monomial_table(expected),
                                monomial_table(by_rule)));

    // The same identity as a polynomial in x by brute-force expansion.
    const BiPoly expanded = pow(u, id.u_power) *
                            pow(BiPoly(d.delta) * v + BiPoly(d.beta) * w, id.pair_power) *
                            pow(BiPoly(d.gamma) * w, id.gamma_power);
    checks.push_back(make_check("[t^5 s^5] " + id.name + " in x", substitute(expected, d),
                                bipoly_coeff(expanded, 5, 5)));
  }

  const Poly &al = d.alpha, &be = d.beta, &de = d.delta, &ga = d.gamma;
  auto P = [](int c) { return Poly(c); };
  const Poly assembled =
      P(252) * pow(al, 10) - P(10) * pow(al, 8) * (P(112) * de + P(70) * be) +
      P(10) * pow(al, 7) * (P(70) * ga) +
      P(35) * pow(al, 6) * (P(52) * pow(de, 2) + P(60) * be * de + P(20) * pow(be, 2)) -
      P(60) * pow(al, 5) * (P(30) * de * ga + P(20) * be * ga) -
      P(50) * pow(al, 4) *
          (P(24) * pow(de, 3) + P(42) * be * pow(de, 2) + P(24) * pow(be, 2) * de +
           P(6) * pow(be, 3)) +
      P(25) * pow(al, 4) * (P(20) * pow(ga, 2)) +
      P(100) * pow(al, 3) *
          (P(14) * pow(de, 2) * ga + P(16) * be * de * ga + P(6) * pow(be, 2) * ga) +
      P(25) * pow(al, 2) *
          (P(12) * pow(de, 4) + P(24) * be * pow(de, 3) + P(24) * pow(be, 2) * pow(de, 2) +
           P(8) * pow(be, 3) * de + P(2) * pow(be, 4)) -
      P(60) * pow(al, 2) * (P(8) * de * pow(ga, 2) + P(6) * be * pow(ga, 2)) -
      P(40) * al *
          (P(6) * pow(de, 3) * ga + P(12) * be * pow(de, 2) * ga + P(6) * pow(be, 2) * de * ga +
           P(2) * pow(be, 3) * ga) +
      P(10) * al * (P(6) * pow(ga, 3)) -
      P(2) * (P(30) * be * pow(de, 4) + P(20) * pow(be, 3) * pow(de, 2) + pow(be, 5)) +
      P(15) * (P(4) * pow(de, 2) * pow(ga, 2) + P(4) * be * de * pow(ga, 2) +
               P(2) * pow(be, 2) * pow(ga, 2));
  const Poly simplified =
      Poly::from_terms({{4, 2 * 5}, {5, 2 * 1422}, {6, 2 * 1675}, {7, 2 * 3130},
                        {8, 2 * 4875}, {9, 2 * 5930}, {10, 2 * 4881}});
  const Poly extracted = bipoly_coeff(recurrence, 5, 5);
  checks.push_back(make_check("assembled coefficient expression simplifies", simplified, assembled));
  checks.push_back(make_check("[t^5 s^5] a_10 from recurrence", simplified, extracted));
  return checks;
}

Poly gap(int n, int m, const WordSumOptions& options) {
  const Poly by_sum = p_word_sum(n, m, options).p;
  const Poly by_newton = p_newton(n, m).p;
  if (by_sum != by_newton)
    throw RouteMismatch("word-sum and Newton averages disagree at (" + std::to_string(n) + ", " +
                        std::to_string(m) + ")");
  return clustered_trace_closed(n, m) - by_sum;
}

GapScan gap_sign_scan(const Poly& gap_poly, const Rational& x_lo, const Rational& x_hi, int steps,
                      const Rational& max_width) {
  if (x_lo < 0 || !(x_lo < x_hi)) throw RangeError("scan needs 0 <= x_lo < x_hi");
  if (steps < 1) throw RangeError("scan needs steps >= 1");
  if (max_width <= 0) throw RangeError("bracket width must be positive");

  GapScan scan;
  const Rational step = (x_hi - x_lo) / steps;
  for (int i = 0; i <= steps; ++i) {
    const Rational x = x_lo + step * i;
    scan.samples.push_back({x, sign(eval(gap_poly, x))});
  }

  const SignSample* last_nonzero = nullptr;
  for (const auto& sample : scan.samples) {
    if (sample.sign == 0) continue;
    if (last_nonzero != nullptr && last_nonzero->sign != sample.sign) {
      SignBracket b{last_nonzero->x, sample.x, last_nonzero->sign, sample.sign};
      while (b.hi - b.lo > max_width) {
        const Rational mid = (b.lo + b.hi) / 2;
        const int s = sign(eval(gap_poly, mid));
        if (s == 0) {
          b.lo = b.hi = mid;
          b.sign_lo = b.sign_hi = 0;
        } else if (s == b.sign_lo) {
          b.lo = mid;
        } else {
          b.hi = mid;
        }
      }
      scan.brackets.push_back(b);
    }
    last_nonzero = &sample;
  }
  return scan;
}

GapScan gap_sign_scan(int n, int m, const Rational& x_lo, const Rational& x_hi, int steps,
                      const WordSumOptions& options) {
  return gap_sign_scan(gap(n, m, options), x_lo, x_hi, steps);
}

RatioLeading ratio_leading_exact(const Poly& numerator, const Poly& denominator) {
  const Valuation num = valuation(numerator);
  const Valuation den = valuation(denominator);
  return {num.degree - den.degree, num.coefficient / den.coefficient};
}

RatioLeading ratio_leading(int n, int m) {
  if (n < 5 || m < 5) throw RangeError("ratio asymptotics hold for n, m >= 5");
  const int ell = std::min(n, m);
  const Integer d = n == m ? pow2(ell) : pow2(ell - 1);
  RatioLeading closed{4 - ell, make_rational(n + m, d * binomial(n + m, n))};
  const RatioLeading exact = ratio_leading_exact(p_newton(n, m).p, clustered_trace_closed(n, m));
  if (exact.exponent != closed.exponent || exact.coefficient != closed.coefficient)
    throw RouteMismatch("ratio leading term disagrees with the exact polynomials");
  return closed;
}

}  // namespace bmv

namespace bmv {

Json ensemble_to_json(const EnsembleResult& result) {
  Json j;
  j["n"] = result.n;
  j["m"] = result.m;
  j["method"] = to_string(result.method);
  j["word_count"] = result.word_count.convert_to<std::uint64_t>();
  j["p"] = poly_to_json(result.p);
  return j;
}

std::string scan_to_csv(const GapScan& scan) {
  std::string out = "x_num,x_den,sign\n";
  for (const auto& sample : scan.samples) {
    out += boost::multiprecision::numerator(sample.x).str() + "," +
           boost::multiprecision::denominator(sample.x).str() + "," +
           std::to_string(sample.sign) + "\n";
  }
  return out;
}

}  // namespace bmv
