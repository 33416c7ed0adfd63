#include "bmv/average.hpp"
#include "bmv/errors.hpp"
#include "bmv/family.hpp"
#include "bmv/matrix.hpp"
#include "bmv/words.hpp"

#include <doctest.h>

using namespace bmv;

namespace {

Poly x_pow(int d) { return Poly::monomial(Rational(1), d); }

Poly average_55() {
  return scale(x_pow(4) * Poly::from_terms({{0, 5}, {1, 1422}, {2, 1675}, {3, 3130}, {4, 4875},
                                            {5, 5930}, {6, 4881}}),
               make_rational(1, 126));
}

Poly gap_55() {
  return scale(x_pow(4) * Poly::from_terms({{0, -1}, {1, 522}, {2, -335}, {3, -626}, {4, -975},
                                            {5, -1186}, {6, 5475}}),
               make_rational(5, 126));
}

}  // namespace

TEST_CASE("small averages") {
  // frozen from an independent symbolic sum
  CHECK(p_word_sum(2, 2).p ==
        Poly::from_terms({{2, make_rational(10, 3)}, {3, make_rational(4, 3)}, {4, 3}}));
  CHECK(p_word_sum(2, 1).p == Poly::from_terms({{1, 1}, {2, 2}, {3, 2}}));
  CHECK(p_word_sum(1, 1).p == Poly::from_terms({{1, 2}, {2, 1}}));
  CHECK(p_newton(2, 2).p == p_word_sum(2, 2).p);
  CHECK(p_word_sum(2, 2).word_count == 6);
}

TEST_CASE("average at (5,5)") {
  const EnsembleResult sum = p_word_sum(5, 5);
  const EnsembleResult newton = p_newton(5, 5);
  CHECK(sum.p == average_55());
  CHECK(newton.p == average_55());
  CHECK(sum.word_count == 252);
  CHECK(sum.method == EnsembleMethod::word_sum);
  CHECK(newton.method == EnsembleMethod::newton);
  const Valuation v = valuation(sum.p);
  CHECK(v.degree == 4);
  CHECK(v.coefficient == make_rational(5, 126));
}

TEST_CASE("threaded word sum matches the serial one") {
  WordSumOptions opts;
  opts.threads = 4;
  CHECK(p_word_sum(6, 5, opts).p == p_word_sum(6, 5).p);
  opts.threads = 3;
  CHECK(p_word_sum(1, 1, opts).p == p_word_sum(1, 1).p);
}

TEST_CASE("word sum and Newton routes agree") {
  for (int n = 1; n <= 11; ++n)
    for (int m = 1; n + m <= 12; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const Poly p = p_word_sum(n, m).p;
      CHECK(p == p_newton(n, m).p);
      CHECK(p == p_newton(m, n).p);
      for (const auto& [d, c] : p.terms()) CHECK(c > 0);
    }
}

TEST_CASE("low-order term of the average") {
  for (int n = 5; n <= 8; ++n)
    for (int m = 5; m <= 8; ++m) {
      const Valuation v = valuation(p_newton(n, m).p);
      CHECK(v.degree == 4);
      CHECK(v.coefficient == make_rational(n + m, binomial(n + m, n)));
    }
  CHECK(valuation(p_newton(5, 6).p).coefficient == make_rational(1, 42));
  CHECK(valuation(p_newton(6, 6).p).coefficient == make_rational(1, 77));
}

TEST_CASE("characteristic polynomial data") {
  const CharPolyData d = char_poly_data();
  CHECK(d.factored_forms_agree);
  CHECK(to_string(d.alpha) == "1 + 2x");
  CHECK(d.beta == Poly::from_terms({{0, 1}, {1, 2}, {2, 3}}));
  CHECK(d.delta == Poly::from_terms({{1, 2}}));
  CHECK(d.gamma == Poly::from_terms({{1, 1}, {2, 1}}));
}

TEST_CASE("Newton power sums match matrix powers") {
  const Family f = build_family();
  const BiMat3 m = to_bipoly(f.a) * BiPoly::t() + to_bipoly(f.b) * BiPoly::s();
  for (int k = 0; k <= 12; ++k) CHECK(power_sum_newton(k) == trace(power(m, k)));
  CHECK_THROWS_AS(power_sum_newton(-1), InvalidExponent);
}

TEST_CASE("coefficient extraction") {
  CHECK(coeff_extract_uvw(10, 0, 0, 5, 5) == 252);
  CHECK(coeff_extract_uvw(8, 1, 0, 5, 5) == 112);
  CHECK(coeff_extract_uvw(8, 0, 1, 5, 5) == 70);
  CHECK(coeff_extract_uvw(0, 0, 5, 5, 5) == 1);
  CHECK_THROWS_AS(coeff_extract_uvw(9, 0, 0, 5, 5), DegreeMismatch);
  CHECK_THROWS_AS(coeff_extract_uvw(-1, 0, 0, 0, -1), RangeError);

  const BiPoly u = BiPoly::t() + BiPoly::s();
  const BiPoly v = BiPoly::t() * BiPoly::t() + BiPoly::s() * BiPoly::s();
  const BiPoly w = BiPoly::t() * BiPoly::s();
  for (int a = 0; a <= 14; ++a)
    for (int b = 0; a + 2 * b <= 14; ++b)
      for (int c = 0; a + 2 * b + 2 * c <= 14; ++c) {
        const BiPoly product = pow(u, a) * pow(v, b) * pow(w, c);
        const int degree = a + 2 * b + 2 * c;
        for (int n = 0; n <= degree; ++n)
          CHECK(bipoly_coeff(product, n, degree - n) == Poly(coeff_extract_uvw(a, b, c, n, degree - n)));
      }
}

TEST_CASE("hardcoded degree-ten identities") {
  const auto checks = verify_newton10_hardcoded();
  CHECK(checks.size() == 31);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("gap examples") {
  WordSumOptions opts;
  CHECK(gap(1, 1).is_zero());
  CHECK(gap(5, 5) == gap_55());
  CHECK(sign(eval(gap(5, 5), make_rational(1, 1000))) < 0);
  CHECK(sign(eval(gap(5, 5), make_rational(1, 10))) > 0);
  CHECK_THROWS_AS(gap(0, 3), RangeError);
  opts.max_words = 100;
  CHECK_THROWS_AS(gap(5, 5, opts), ComplexityGuard);
}

TEST_CASE("sign scan brackets the crossover") {
  const GapScan scan = gap_sign_scan(5, 5, Rational(0), make_rational(1, 10), 100);
  REQUIRE(scan.samples.size() == 101);
  CHECK(scan.samples[0].sign == 0);
  CHECK(scan.samples[1].x == make_rational(1, 1000));
  CHECK(scan.samples[1].sign == -1);
  CHECK(scan.samples[100].sign == 1);
  REQUIRE(scan.brackets.size() == 1);
  const SignBracket& b = scan.brackets[0];
  CHECK(b.sign_lo == -1);
  CHECK(b.sign_hi == 1);
  CHECK(b.hi - b.lo <= make_rational(1, 1000000000));
  // frozen from an independent high-precision root finder: 0.0019180783600274413...
  const Rational root_lo = parse_rational("0.00191807836002744");
  const Rational root_hi = parse_rational("0.00191807836002745");
  CHECK(b.lo <= root_lo);
  CHECK(root_hi <= b.hi);

  const std::string csv = scan_to_csv(scan);
  CHECK(csv.rfind("x_num,x_den,sign\n0,1,0\n1,1000,-1\n", 0) == 0);
  CHECK_THROWS_AS(gap_sign_scan(gap_55(), Rational(1), Rational(0), 10), RangeError);
  CHECK_THROWS_AS(gap_sign_scan(gap_55(), Rational(0), Rational(1), 0), RangeError);
}

TEST_CASE("ratio leading terms") {
  const RatioLeading r55 = ratio_leading(5, 5);
  CHECK(r55.exponent == -1);
  CHECK(r55.coefficient == make_rational(5, 4032));
  const RatioLeading r56 = ratio_leading(5, 6);
  CHECK(r56.exponent == -1);
  CHECK(r56.coefficient == make_rational(1, 672));
  const RatioLeading r66 = ratio_leading(6, 6);
  CHECK(r66.exponent == -2);
  CHECK(r66.coefficient == make_rational(1, 4928));
  for (int n = 5; n <= 9; ++n)
    for (int m = 5; m <= 9; ++m) CHECK(ratio_leading(n, m).exponent == 4 - std::min(n, m));
  CHECK_THROWS_AS(ratio_leading(4, 6), RangeError);
}

TEST_CASE("ensemble json") {
  const Json j = ensemble_to_json(p_word_sum(2, 1));
  CHECK(j["n"] == 2);
  CHECK(j["m"] == 1);
  CHECK(j["method"] == "word_sum");
  CHECK(j["word_count"] == 3);
  CHECK(j["p"]["terms"].dump() == R"([[1,"1/1"],[2,"2/1"],[3,"2/1"]])");
}
