#include "bmv/verify.hpp"

#include "bmv/asymptotics.hpp"
#include "bmv/average.hpp"
#include "bmv/errors.hpp"
#include "bmv/family.hpp"
#include "bmv/words.hpp"

#include <algorithm>

namespace bmv {

namespace {

Poly x_pow(int d) { return Poly::monomial(Rational(1), d); }

// x^4/126 (5 + 1422x + 1675x^2 + 3130x^3 + 4875x^4 + 5930x^5 + 4881x^6)
Poly average_55_reference() {
  const Poly factor = Poly::from_terms(
      {{0, 5}, {1, 1422}, {2, 1675}, {3, 3130}, {4, 4875}, {5, 5930}, {6, 4881}});
  return scale(x_pow(4) * factor, make_rational(1, 126));
}

// 5x^4/126 (5475x^6 - 1186x^5 - 975x^4 - 626x^3 - 335x^2 + 522x - 1)
Poly gap_55_reference() {
  const Poly factor = Poly::from_terms(
      {{6, 5475}, {5, -1186}, {4, -975}, {3, -626}, {2, -335}, {1, 522}, {0, -1}});
  return scale(x_pow(4) * factor, make_rational(5, 126));
}

std::string sign_string(int s) { return s < 0 ? "-" : (s > 0 ? "+" : "0"); }

void append(std::vector<Check>& to, const std::vector<Check>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

Report verify_section_normal_form() {
  Report report;
  report.command = "verify";
  report.inputs["section"] = "normal-form";
  append(report.checks, verify_normal_form());

  const Family f = build_family();
  const ProjectionSet proj = build_projections();
  report.checks.push_back(make_check("A_0 = P", to_string(to_poly(proj.p)),
                                     to_string(to_poly(evaluate(f.a, 0)))));
  report.checks.push_back(make_check("B_0 = Q", to_string(to_poly(proj.q)),
                                     to_string(to_poly(evaluate(f.b, 0)))));

  int agree = 0;
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m) agree += clustered_trace_closed(n, m) == clustered_trace_direct(n, m);
  report.checks.push_back(make_check("closed clustered trace = direct product, 1 <= n,m <= 8",
                                     "64 of 64", std::to_string(agree) + " of 64"));
  report.checks.push_back(make_check("tr(A^5 B^5)",
                                     Poly::from_terms({{5, 32}, {10, 256}}),
                                     clustered_trace_direct(5, 5)));

  const Poly x = Poly::x();
  const Poly one_minus_x = Poly(1) - x;
  const Poly frob_expected = scale(x * x * one_minus_x * one_minus_x, 4) + scale(pow(x, 4), 2);
  report.checks.push_back(make_check("||[A,B]||_F^2", frob_expected, commutator_frobenius_sq()));

  Mat3 displayed;
  const Poly x2 = x * x;
  const Poly x_xm1 = x * (x - Poly(1));
  displayed << Poly(0), x_xm1, -x2,
               -x_xm1, Poly(0), x_xm1,
               x2, -x_xm1, Poly(0);
  report.checks.push_back(make_check("[A,B] entrywise", to_string(displayed),
                                     to_string(family_commutator())));

  for (const Rational& x0 : {Rational(0), make_rational(1, 1000), make_rational(1, 2), Rational(1),
                             Rational(3)}) {
    report.checks.push_back(make_check("A_x, B_x PSD at x = " + to_display(x0), true,
                                       is_psd_by_minors(evaluate(f.a, x0)) &&
                                           is_psd_by_minors(evaluate(f.b, x0))));
  }

  // det(lambda I - A) = lambda (lambda - 1)(lambda - 2x): e1 = 1 + 2x, e2 = 2x, e3 = 0.
  const std::array<Poly, 3> spectrum_coeffs{Poly(1) + scale(x, 2), scale(x, 2), Poly()};
  for (const auto& [name, mat] : {std::pair<const char*, const Mat3*>{"A", &f.a}, {"B", &f.b}}) {
    const auto coeffs = char_poly_of(*mat);
    report.checks.push_back(make_check(std::string("spectrum of ") + name + " is {1, 2x, 0}",
                                       to_string(spectrum_coeffs[0]) + "; " +
                                           to_string(spectrum_coeffs[1]) + "; " +
                                           to_string(spectrum_coeffs[2]),
                                       to_string(coeffs[0]) + "; " + to_string(coeffs[1]) +
                                           "; " + to_string(coeffs[2])));
  }

  report.results["A"] = mat3_to_json(f.a);
  report.results["B"] = mat3_to_json(f.b);
  report.results["commutator"] = mat3_to_json(family_commutator());
  report.results["commutator_frobenius_sq"] = poly_to_json(commutator_frobenius_sq());
  return report;
}

Report verify_section_table1() {
  Report report;
  report.command = "verify";
  report.inputs["section"] = "table1";

  struct Row {
    const char* word;
    int runs;
    int kappa;
    Rational coefficient;
  };
  const Row rows[] = {{"A^5 B^5", 1, 5, 32}, {"A^3 B A B^3 A B", 3, 4, 1}, {"ABABABABAB", 5, 5, 2}};
  Json table = Json::array();
  for (const auto& row : rows) {
    const Word w = parse_word(row.word);
    const std::string label = to_string(w);
    const RunForm rf = run_decomposition(w);
    const KappaResult brute = kappa_brute(w);
    const KappaResult walks = kappa_walks(w);
    const KappaResult bridge = kappa_bridge(rf);
    report.checks.push_back(make_check(label + ": runs", row.runs, rf.r));
    report.checks.push_back(make_check(label + ": kappa (brute)", row.kappa, brute.kappa));
    report.checks.push_back(make_check(label + ": kappa (walks)", row.kappa, walks.kappa));
    report.checks.push_back(make_check(label + ": kappa (bridge)", row.kappa, bridge.kappa));
    report.checks.push_back(
        make_check(label + ": leading coefficient (brute)", row.coefficient, *brute.leading_coefficient));
    report.checks.push_back(
        make_check(label + ": leading coefficient (walks)", row.coefficient, *walks.leading_coefficient));

    Json entry;
    entry["word"] = label;
    entry["r"] = rf.r;
    entry["kappa"] = brute.kappa;
    entry["leading_term"] = to_string(Poly::monomial(*brute.leading_coefficient, brute.kappa));
    entry["trace"] = poly_to_json(word_trace(w));
    table.push_back(std::move(entry));
  }
  report.results["table"] = std::move(table);
  return report;
}

Report verify_section_classification(const VerifyOptions& options) {
  Report report;
  report.command = "verify";
  report.inputs["section"] = "classification";
  report.inputs["n"] = options.n;
  report.inputs["m"] = options.m;
  const int n = options.n, m = options.m;

  const Order4Classification c = classify_order4(n, m, options.threads);
  std::set<Word> shifts = cyclic_shifts(bridge_word(n, m));
  const std::set<Word> found(c.order4.begin(), c.order4.end());
  const long long total = static_cast<long long>(c.total);
  report.checks.push_back(make_check("word count", binomial(n + m, n).str(), std::to_string(total)));
  report.checks.push_back(make_check("every word has kappa >= 4", true, c.min_kappa >= 4));
  report.checks.push_back(make_check("words with kappa = 4", n + m, static_cast<long long>(c.order4.size())));
  report.checks.push_back(make_check("kappa = 4 words are the rotations of " + to_string(bridge_word(n, m)),
                                     true, found == shifts));
  long long at_least_5 = 0;
  for (const auto& [k, count] : c.histogram)
    if (k >= 5) at_least_5 += static_cast<long long>(count);
  report.checks.push_back(make_check("words with kappa >= 5", total - (n + m), at_least_5));

  const EnsembleResult avg = p_newton(n, m);
  const Valuation v = valuation(avg.p);
  report.checks.push_back(make_check("averaged trace valuation", 4, v.degree));
  report.checks.push_back(make_check("averaged trace leading coefficient",
                                     make_rational(n + m, binomial(n + m, n)), v.coefficient));
  const RatioLeading exact = ratio_leading_exact(avg.p, clustered_trace_closed(n, m));
  const RatioLeading closed = ratio_leading(n, m);
  report.checks.push_back(make_check("ratio exponent 4 - min(n,m)", 4 - std::min(n, m), exact.exponent));
  report.checks.push_back(make_check("ratio leading coefficient", closed.coefficient, exact.coefficient));

  Json words = Json::array();
  for (const Word& w : c.order4) words.push_back(to_string(w));
  Json histogram = Json::object();
  for (const auto& [k, count] : c.histogram) histogram[std::to_string(k)] = count;
  report.results["order4_words"] = std::move(words);
  report.results["kappa_histogram"] = std::move(histogram);
  report.results["ratio_exponent"] = exact.exponent;
  report.results["ratio_coefficient"] = to_string(exact.coefficient);
  return report;
}

Report verify_section_appendix() {
  Report report;
  report.command = "verify";
  report.inputs["section"] = "appendix";

  const CharPolyData d = char_poly_data();
  const BiPoly u = BiPoly::t() + BiPoly::s();
  const BiPoly v = BiPoly::t() * BiPoly::t() + BiPoly::s() * BiPoly::s();
  const BiPoly w = BiPoly::t() * BiPoly::s();
  const Poly x = Poly::x();
  const BiPoly e1_expected = BiPoly(scale(x, 2) + Poly(1)) * u;
  const BiPoly e2_expected = BiPoly(scale(x, 2)) * v + BiPoly(Poly::from_terms({{2, 3}, {1, 2}, {0, 1}})) * w;
  const BiPoly e3_expected = BiPoly(x * (x + Poly(1))) * w * u;
  report.checks.push_back(make_check("e1 = tr(M)", to_string(e1_expected), to_string(d.e1)));
  report.checks.push_back(make_check("e2 = sum of principal 2x2 minors", to_string(e2_expected), to_string(d.e2)));
  report.checks.push_back(make_check("e3 = det(M)", to_string(e3_expected), to_string(d.e3)));
  report.checks.push_back(make_check("factored forms in alpha, beta, delta, gamma", true, d.factored_forms_agree));
  append(report.checks, verify_newton10_hardcoded());

  const Poly reference = average_55_reference();
  const EnsembleResult by_sum = p_word_sum(5, 5);
  const EnsembleResult by_newton = p_newton(5, 5);
  report.checks.push_back(make_check("p_{5,5} by word sum", reference, by_sum.p));
  report.checks.push_back(make_check("p_{5,5} by Newton route", reference, by_newton.p));
  const Valuation lead = valuation(by_sum.p);
  report.checks.push_back(make_check("p_{5,5} leading term", "(5/126)x^4",
                                     to_string(Poly::monomial(lead.coefficient, lead.degree))));

  const Poly g = gap(5, 5);
  report.checks.push_back(make_check("L - R gap polynomial", gap_55_reference(), g));
  const int s = sign(eval(g, make_rational(1, 1000)));
  report.checks.push_back(make_check("sign of L - R at x = 1/1000", "-", sign_string(s)));

  const GapScan scan = gap_sign_scan(g, 0, make_rational(1, 10), 100);
  report.checks.push_back(make_check("sign changes on (0, 1/10]", 1, static_cast<long long>(scan.brackets.size())));
  if (!scan.brackets.empty()) {
    const SignBracket& b = scan.brackets.front();
    report.checks.push_back(make_check("bracket width <= 1e-9", true,
                                       b.hi - b.lo <= make_rational(1, 1000000000)));
    report.checks.push_back(make_check("bracket goes from - to +", "-+",
                                       sign_string(b.sign_lo) + sign_string(b.sign_hi)));
    report.results["sign_change_bracket"] = Json::array({to_string(b.lo), to_string(b.hi)});
  }

  const RatioLeading ratio = ratio_leading_exact(by_sum.p, clustered_trace_closed(5, 5));
  report.checks.push_back(make_check("p_{5,5} / tr(A^5 B^5) exponent", -1, ratio.exponent));
  report.checks.push_back(make_check("p_{5,5} / tr(A^5 B^5) coefficient", make_rational(5, 4032), ratio.coefficient));

  report.results["p_5_5"] = poly_to_json(by_sum.p);
  report.results["gap_5_5"] = poly_to_json(g);
  return report;
}

Report run_verify(const std::string& section, const VerifyOptions& options) {
  if (section == "normal-form") return verify_section_normal_form();
  if (section == "table1") return verify_section_table1();
  if (section == "classification") return verify_section_classification(options);
  if (section == "appendix") return verify_section_appendix();
  if (section != "all") throw RangeError("unknown verify section '" + section + "'");

  Report all;
  all.command = "verify";
  all.inputs["section"] = "all";
  for (Report part : {verify_section_normal_form(), verify_section_table1(),
                      verify_section_classification(options), verify_section_appendix()}) {
    const std::string name = part.inputs["section"].get<std::string>();
    for (auto& c : part.checks) c.name = name + ": " + c.name;
    append(all.checks, part.checks);
    all.results[name] = part.results;
  }
  return all;
}

}  // namespace bmv
