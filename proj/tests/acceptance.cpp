// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "bmv/asymptotics.hpp"
#include "bmv/average.hpp"
#include "bmv/errors.hpp"
#include "bmv/family.hpp"
#include "bmv/matrix.hpp"
#include "bmv/words.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace bmv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

Poly x_pow(int d) { return Poly::monomial(Rational(1), d); }

Outcome normal_form() {
  Outcome out;
  const Family f = build_family();
  const ProjectionSet pr = build_projections();
  const Mat3 p = to_poly(pr.p), u = to_poly(pr.u), v = to_poly(pr.v), q = to_poly(pr.q);
  const Poly eps = scale(Poly::x(), 2);
  out.require(f.a == p + u * eps, "A != P + 2xU");
  out.require(f.b == v * eps + q, "B != 2xV + Q");
  out.require(is_zero(RationalMat3(pr.p * pr.q)), "PQ != 0");
  out.require(trace(RationalMat3(pr.p * pr.v)) == make_rational(1, 2), "tr(PV) != 1/2");
  out.require(trace(RationalMat3(pr.u * pr.q)) == make_rational(1, 2), "tr(UQ) != 1/2");
  out.require(trace(RationalMat3(pr.u * pr.v)) == make_rational(1, 4), "tr(UV) != 1/4");
  for (const auto& c : verify_normal_form()) out.require(c.pass, c.name);
  return out;
}

Outcome closed_form() {
  Outcome out;
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m)
      out.require(clustered_trace_closed(n, m) == clustered_trace_direct(n, m),
                  "closed form differs at (" + std::to_string(n) + ", " + std::to_string(m) + ")");
  const Poly t55 = clustered_trace_closed(5, 5);
  out.require(t55 == Poly::from_terms({{5, 32}, {10, 256}}), "tr(A^5 B^5) = " + to_string(t55));
  out.require(to_string(t55) == "32x^5 + 256x^10", "rendering " + to_string(t55));
  return out;
}

Outcome table1() {
  Outcome out;
  struct Row {
    const char* word;
    int kappa;
    int coefficient;
  };
  for (const Row& row : {Row{"A^5 B^5", 5, 32}, Row{"A^3 B A B^3 A B", 4, 1},
                         Row{"ABABABABAB", 5, 2}}) {
    const Word w = parse_word(row.word);
    const KappaResult brute = kappa_brute(w);
    const KappaResult walks = kappa_walks(w);
    const KappaResult bridge = kappa_bridge(run_decomposition(w));
    const std::string label = row.word;
    out.require(brute.kappa == row.kappa, label + ": brute kappa " + std::to_string(brute.kappa));
    out.require(walks.kappa == row.kappa, label + ": walks kappa " + std::to_string(walks.kappa));
    out.require(bridge.kappa == row.kappa, label + ": bridge kappa " + std::to_string(bridge.kappa));
    out.require(*brute.leading_coefficient == row.coefficient, label + ": brute coefficient");
    out.require(*walks.leading_coefficient == row.coefficient, label + ": walks coefficient");
  }
  return out;
}

Outcome exhaustive_small() {
  Outcome out;
  std::uint64_t words = 0;
  for (int length = 2; length <= 12; ++length)
    for (int n = 1; n < length; ++n)
      WordEnumeration(n, length - n).for_each([&](const Word& w) {
        ++words;
        const std::string label = to_plain_string(w);
        const Poly tr = word_trace(w);
        const KappaResult brute = kappa_brute(w);
        const auto expansion = walk_expansion(w);
        const KappaResult walks = kappa_walks(w);
        const KappaResult bridge = kappa_bridge(run_decomposition(w));
        out.require(brute.kappa == walks.kappa && brute.kappa == bridge.kappa,
                    label + ": kappa routes disagree");
        out.require(*brute.leading_coefficient == *walks.leading_coefficient,
                    label + ": leading coefficients disagree");
        out.require(expansion_sum(expansion) == tr, label + ": walk expansion incomplete");
        for (const auto& [d, c] : tr.terms()) out.require(c > 0, label + ": negative coefficient");
      });
  out.require(words == 8166, "swept " + std::to_string(words) + " words");
  if (out.pass) out.detail = std::to_string(words) + " words";
  return out;
}

Outcome classification() {
  Outcome out;
  const Order4Classification c = classify_order4(5, 5);
  const auto shifts = cyclic_shifts(bridge_word(5, 5));
  out.require(c.order4.size() == 10, std::to_string(c.order4.size()) + " order-4 words");
  out.require(std::set<Word>(c.order4.begin(), c.order4.end()) == shifts,
              "order-4 words are not the shifts of A^3 B A B^3 A B");
  std::uint64_t higher = 0;
  for (const auto& [k, count] : c.histogram)
    if (k >= 5) higher += count;
  out.require(higher == 242, std::to_string(higher) + " words with kappa >= 5");
  out.require(c.min_kappa == 4, "minimum kappa at (5,5)");
  out.require(classify_order4(5, 6).min_kappa >= 4, "kappa < 4 at (5,6)");
  out.require(classify_order4(6, 6).min_kappa >= 4, "kappa < 4 at (6,6)");
  return out;
}

Outcome averaged_trace() {
  Outcome out;
  const Poly expected =
      scale(x_pow(4) * Poly::from_terms({{0, 5}, {1, 1422}, {2, 1675}, {3, 3130}, {4, 4875},
                                         {5, 5930}, {6, 4881}}),
            make_rational(1, 126));
  const Poly by_sum = p_word_sum(5, 5).p;
  const Poly by_newton = p_newton(5, 5).p;
  out.require(by_sum == expected, "word sum p_{5,5} = " + to_string(by_sum));
  out.require(by_newton == expected, "Newton p_{5,5} = " + to_string(by_newton));
  const Valuation v = valuation(by_sum);
  out.require(v.degree == 4 && v.coefficient == make_rational(5, 126),
              "leading term " + to_string(Poly::monomial(v.coefficient, v.degree)));
  return out;
}

Outcome appendix() {
  Outcome out;
  const CharPolyData d = char_poly_data();
  const BiPoly u = BiPoly::t() + BiPoly::s();
  const BiPoly v = BiPoly::t() * BiPoly::t() + BiPoly::s() * BiPoly::s();
  const BiPoly w = BiPoly::t() * BiPoly::s();
  const Poly x = Poly::x();
  out.require(d.e1 == BiPoly(scale(x, 2) + Poly(1)) * u, "e1 != (2x+1)(t+s)");
  out.require(d.e2 == BiPoly(scale(x, 2)) * v +
                          BiPoly(Poly::from_terms({{0, 1}, {1, 2}, {2, 3}})) * w,
              "e2 mismatch");
  out.require(d.e3 == BiPoly(x * (x + Poly(1))) * u * w, "e3 mismatch");
  out.require(d.factored_forms_agree, "factored forms disagree");
  const auto checks = verify_newton10_hardcoded();
  out.require(checks.size() == 31, std::to_string(checks.size()) + " appendix checks");
  for (const auto& c : checks) out.require(c.pass, c.name);
  if (out.pass) out.detail = std::to_string(checks.size()) + " identities";
  return out;
}

Outcome counterexample() {
  Outcome out;
  const Poly expected =
      scale(x_pow(4) * Poly::from_terms({{0, -1}, {1, 522}, {2, -335}, {3, -626}, {4, -975},
                                         {5, -1186}, {6, 5475}}),
            make_rational(5, 126));
  const Poly g = gap(5, 5);
  out.require(g == expected, "gap(5,5) = " + to_string(g));
  out.require(sign(eval(g, make_rational(1, 1000))) < 0, "gap(1/1000) is not negative");
  const GapScan scan = gap_sign_scan(g, Rational(0), make_rational(1, 10), 100);
  out.require(scan.brackets.size() == 1, std::to_string(scan.brackets.size()) + " sign changes");
  if (scan.brackets.size() == 1) {
    const SignBracket& b = scan.brackets.front();
    out.require(b.hi - b.lo <= make_rational(1, 1000000000), "bracket wider than 1e-9");
    out.require(b.sign_lo < 0 && b.sign_hi > 0, "bracket signs");
    out.require(sign(eval(g, b.lo)) < 0 && sign(eval(g, b.hi)) > 0, "bracket endpoints");
    if (out.pass) out.detail = "root in [" + to_display(b.lo) + ", " + to_display(b.hi) + "]";
  }
  return out;
}

Outcome ratio_divergence() {
  Outcome out;
  const RatioLeading r55 = ratio_leading_exact(p_newton(5, 5).p, clustered_trace_closed(5, 5));
  out.require(r55.exponent == -1 && r55.coefficient == make_rational(5, 4032),
              "(5,5) ratio leading term " + to_display(r55.coefficient) + " x^" +
                  std::to_string(r55.exponent));
  for (auto [n, m] : {std::pair{5, 6}, std::pair{6, 6}}) {
    const RatioLeading r = ratio_leading_exact(p_newton(n, m).p, clustered_trace_closed(n, m));
    const int ell = std::min(n, m);
    out.require(r.exponent == 4 - ell && r.exponent < 0,
                "(" + std::to_string(n) + "," + std::to_string(m) + ") exponent " +
                    std::to_string(r.exponent));
    try {
      const RatioLeading closed = ratio_leading(n, m);
      out.require(closed.coefficient == r.coefficient, "closed-form coefficient");
    } catch (const RouteMismatch& e) {
      out.require(false, e.what());
    }
  }
  return out;
}

Outcome commutator_identity() {
  Outcome out;
  const Poly x = Poly::x();
  const Poly one_minus_x = Poly(1) - x;
  const Poly frob = scale(x * x * one_minus_x * one_minus_x, 4) + scale(pow(x, 4), 2);
  out.require(commutator_frobenius_sq() == frob, "||[A,B]||_F^2 = " + to_string(commutator_frobenius_sq()));
  const Poly x2 = x * x;
  const Poly c = x * (x - Poly(1));
  Mat3 displayed;
  displayed << Poly(0), c, -x2,
               -c, Poly(0), c,
               x2, -c, Poly(0);
  out.require(family_commutator() == displayed, "[A,B] = " + to_string(family_commutator()));
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "normal form and overlap table", 1.0, normal_form},
      {2, "clustered trace closed form", 1.0, closed_form},
      {3, "benchmark words, three kappa methods", 1.0, table1},
      {4, "kappa agreement and expansion completeness, n+m <= 12", 120.0, exhaustive_small},
      {5, "order-4 classification", 60.0, classification},
      {6, "averaged trace at (5,5)", 30.0, averaged_trace},
      {7, "characteristic polynomial and extraction identities", 30.0, appendix},
      {8, "counterexample gap and sign bracket", 5.0, counterexample},
      {9, "ratio divergence", 60.0, ratio_divergence},
      {10, "commutator", 1.0, commutator_identity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += !pass;
    std::string detail = outcome.detail;
    if (!in_time) detail = "too slow" + (detail.empty() ? "" : "; " + detail);
    std::printf("[%s] %2d %s (%.3f s, limit %g s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                seconds, c.limit_seconds, detail.empty() ? "" : ": ", detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
