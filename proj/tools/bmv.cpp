// Command-line front end: exact traces, leading exponents, word averages and
// the reproduction suite for the (A_x, B_x) counterexample family.

#include "bmv/asymptotics.hpp"
#include "bmv/average.hpp"
#include "bmv/errors.hpp"
#include "bmv/family.hpp"
#include "bmv/report.hpp"
#include "bmv/verify.hpp"
#include "bmv/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using bmv::Json;
using bmv::Report;

struct GlobalOptions {
  std::string format = "text";
  std::string out;
  std::uint64_t max_words = bmv::WordSumOptions{}.max_words;
  std::optional<int> max_runs;
  unsigned threads = 1;

  bmv::SearchLimits limits() const {
    bmv::SearchLimits l;
    if (max_runs) l.max_walk_runs = l.max_bridge_runs = *max_runs;
    return l;
  }
  bmv::WordSumOptions word_sum() const { return {max_words, threads}; }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string poly_csv(const bmv::Poly& p, const std::string& prefix_header = "",
                     const std::string& prefix = "") {
  std::string out;
  for (const auto& [d, c] : p.terms())
    out += prefix + std::to_string(d) + "," + bmv::to_string(c) + "\n";
  return prefix_header + "degree,coefficient\n" + out;
}

std::string checks_csv(const Report& r) {
  std::string out = "name,expected,actual,pass\n";
  for (const auto& c : r.checks)
    out += csv_field(c.name) + "," + csv_field(c.expected) + "," + csv_field(c.actual) + "," +
           (c.pass ? "true" : "false") + "\n";
  return out;
}

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw bmv::Error("cannot write " + g.out);
  file << text;
}

std::string render(const GlobalOptions& g, const Report& r, const std::string& csv) {
  if (g.format == "json") return bmv::to_json(r).dump(2) + "\n";
  if (g.format == "csv") return csv;
  return bmv::render_text(r);
}

Report cmd_trace(const std::string& word_text, std::string* csv) {
  const bmv::Word w = bmv::parse_word(word_text);
  const bmv::Poly tr = bmv::word_trace(w);
  Report r;
  r.command = "trace";
  r.inputs["word"] = bmv::to_string(w);
  r.results["n"] = w.count_a();
  r.results["m"] = w.count_b();
  r.results["trace"] = bmv::poly_to_json(tr);
  const bmv::Valuation v = bmv::valuation(tr);
  r.results["valuation"] = v.degree;
  r.results["low_coefficient"] = bmv::to_string(v.coefficient);
  *csv = poly_csv(tr);
  return r;
}

Report cmd_kappa(const GlobalOptions& g, const std::string& word_text, const std::string& method,
                 std::string* csv) {
  const bmv::Word w = bmv::parse_word(word_text);
  Report r;
  r.command = "kappa";
  r.inputs["word"] = bmv::to_string(w);
  r.inputs["method"] = method;
  const auto limits = g.limits();
  std::vector<bmv::KappaResult> results;
  if (method == "brute" || method == "all") results.push_back(bmv::kappa_brute(w));
  if (method == "walks" || method == "all") results.push_back(bmv::kappa_walks(w, limits));
  if (method == "bridge" || method == "all")
    results.push_back(bmv::kappa_bridge(bmv::run_decomposition(w), limits));

  Json list = Json::array();
  *csv = "method,kappa,leading_coefficient,minimizers\n";
  for (const auto& k : results) {
    list.push_back(bmv::kappa_to_json(w, k));
    *csv += bmv::to_string(k.method) + "," + std::to_string(k.kappa) + "," +
            (k.leading_coefficient ? bmv::to_string(*k.leading_coefficient) : "") + "," +
            std::to_string(k.walk_minimizers.size() + k.bridge_minimizers.size()) + "\n";
  }
  r.results["run_form"] = [&] {
    const bmv::RunForm rf = bmv::run_decomposition(w);
    Json j;
    j["r"] = rf.r;
    j["a"] = rf.a;
    j["b"] = rf.b;
    j["rotation_offset"] = rf.rotation_offset;
    return j;
  }();
  r.results["kappa"] = std::move(list);
  if (method == "all") {
    const auto& brute = results[0];
    for (std::size_t i = 1; i < results.size(); ++i)
      r.checks.push_back(bmv::make_check("kappa " + bmv::to_string(results[i].method) + " = brute",
                                         brute.kappa, results[i].kappa));
    r.checks.push_back(bmv::make_check("leading coefficient walks = brute",
                                       *brute.leading_coefficient, *results[1].leading_coefficient));
  }
  return r;
}

Report cmd_average(const GlobalOptions& g, int n, int m, const std::string& method,
                   std::string* csv) {
  Report r;
  r.command = "average";
  r.inputs["n"] = n;
  r.inputs["m"] = m;
  r.inputs["method"] = method;
  std::vector<bmv::EnsembleResult> results;
  if (method == "sum" || method == "both") results.push_back(bmv::p_word_sum(n, m, g.word_sum()));
  if (method == "newton" || method == "both") results.push_back(bmv::p_newton(n, m));
  Json list = Json::array();
  *csv = "method,degree,coefficient\n";
  for (const auto& e : results) {
    list.push_back(bmv::ensemble_to_json(e));
    for (const auto& [d, c] : e.p.terms())
      *csv += bmv::to_string(e.method) + "," + std::to_string(d) + "," + bmv::to_string(c) + "\n";
  }
  r.results["averages"] = std::move(list);
  const bmv::Valuation v = bmv::valuation(results.front().p);
  r.results["valuation"] = v.degree;
  r.results["low_coefficient"] = bmv::to_string(v.coefficient);
  if (results.size() == 2)
    r.checks.push_back(bmv::make_check("word-sum and Newton routes agree", results[0].p, results[1].p));
  return r;
}

Report cmd_scan(const GlobalOptions& g, int n, int m, const std::string& lo_text,
                const std::string& hi_text, int steps, std::string* csv) {
  const bmv::Rational lo = bmv::parse_rational(lo_text);
  const bmv::Rational hi = bmv::parse_rational(hi_text);
  const bmv::Poly gap = bmv::gap(n, m, g.word_sum());
  const bmv::GapScan scan = bmv::gap_sign_scan(gap, lo, hi, steps);
  Report r;
  r.command = "scan";
  r.inputs["n"] = n;
  r.inputs["m"] = m;
  r.inputs["x_lo"] = bmv::to_string(lo);
  r.inputs["x_hi"] = bmv::to_string(hi);
  r.inputs["steps"] = steps;
  r.results["gap"] = bmv::poly_to_json(gap);
  int negative = 0, positive = 0;
  for (const auto& s : scan.samples) {
    if (s.sign < 0) ++negative;
    if (s.sign > 0) ++positive;
  }
  r.results["negative_samples"] = negative;
  r.results["positive_samples"] = positive;
  Json brackets = Json::array();
  for (const auto& b : scan.brackets) {
    Json j;
    j["lo"] = bmv::to_string(b.lo);
    j["hi"] = bmv::to_string(b.hi);
    j["lo_approx"] = b.lo.convert_to<double>();
    j["sign_lo"] = b.sign_lo;
    j["sign_hi"] = b.sign_hi;
    brackets.push_back(std::move(j));
  }
  r.results["brackets"] = std::move(brackets);
  *csv = bmv::scan_to_csv(scan);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trace, leading-exponent and word-average computations for the (A_x, B_x) family"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output (the CSV for scan) to this file");
  app.add_option("--max-words", g.max_words, "Cap on words summed by the word-sum route")
      ->capture_default_str();
  app.add_option("--max-runs", g.max_runs, "Cap on runs for walk and bridge searches");
  app.add_option("--threads", g.threads, "Worker threads for word sweeps")->capture_default_str();

  std::string word, method = "all", avg_method = "both", section = "all";
  std::string x_lo = "0", x_hi = "1/10";
  int n = 5, m = 5, steps = 100;

  auto* trace = app.add_subcommand("trace", "Exact trace polynomial of a word");
  trace->add_option("--word", word, "Word, e.g. \"A^3 B A B^3 A B\" or ABAB")->required();

  auto* kappa = app.add_subcommand("kappa", "Leading exponent of a word's trace");
  kappa->add_option("--word", word, "Word containing both letters")->required();
  kappa->add_option("--method", method)
      ->check(CLI::IsMember({"all", "brute", "walks", "bridge"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a reproduction section");
  verify->add_option("--section", section)
      ->check(CLI::IsMember({"normal-form", "table1", "classification", "appendix", "all"}))
      ->capture_default_str();
  verify->add_option("--n", n)->capture_default_str();
  verify->add_option("--m", m)->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Alias for verify --section classification");
  classify->add_option("--n", n)->capture_default_str();
  classify->add_option("--m", m)->capture_default_str();

  auto* average = app.add_subcommand("average", "Normalized word average p_{n,m}");
  average->add_option("--n", n)->required();
  average->add_option("--m", m)->required();
  average->add_option("--method", avg_method)
      ->check(CLI::IsMember({"sum", "newton", "both"}))
      ->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Exact sign scan of tr(A^n B^m) - p_{n,m}");
  scan->add_option("--n", n)->capture_default_str();
  scan->add_option("--m", m)->capture_default_str();
  scan->add_option("--x-lo", x_lo, "Rational or decimal")->capture_default_str();
  scan->add_option("--x-hi", x_hi, "Rational or decimal")->capture_default_str();
  scan->add_option("--steps", steps)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    Report report;
    std::string csv;
    if (trace->parsed()) {
      report = cmd_trace(word, &csv);
    } else if (kappa->parsed()) {
      report = cmd_kappa(g, word, method, &csv);
    } else if (verify->parsed() || classify->parsed()) {
      report = bmv::run_verify(classify->parsed() ? "classification" : section, {n, m, g.threads});
      if (classify->parsed()) report.command = "classify";
      csv = checks_csv(report);
    } else if (average->parsed()) {
      report = cmd_average(g, n, m, avg_method, &csv);
    } else if (scan->parsed()) {
      report = cmd_scan(g, n, m, x_lo, x_hi, steps, &csv);
      if (!g.out.empty()) {
        emit(g, csv);
        std::cout << render(g, report, csv);
        return report.passed() ? 0 : 1;
      }
    }
    emit(g, render(g, report, csv));
    return report.passed() ? 0 : 1;
  } catch (const bmv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
