#include "bmv/report.hpp"

#include <algorithm>
#include <sstream>

namespace bmv {

Check make_check(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

Check make_check(std::string name, const Poly& expected, const Poly& actual) {
  return {std::move(name), to_string(expected), to_string(actual), expected == actual};
}

Check make_check(std::string name, const Rational& expected, const Rational& actual) {
  return {std::move(name), to_display(expected), to_display(actual), expected == actual};
}

Check make_check(std::string name, bool expected, bool actual) {
  auto str = [](bool b) { return std::string(b ? "true" : "false"); };
  return {std::move(name), str(expected), str(actual), expected == actual};
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["results"] = report.results;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["pass"] = report.passed();
  return j;
}

namespace {

bool is_poly_json(const Json& v) { return v.is_object() && v.contains("var") && v.contains("terms"); }

bool is_poly_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array() || row.empty()) return false;
    for (const auto& e : row)
      if (!is_poly_json(e)) return false;
  }
  return true;
}

void render_value(std::ostringstream& out, const Json& value, int indent) {
  const std::string pad(indent, ' ');
  if (is_poly_json(value)) {
    out << to_string(poly_from_json(value)) << "\n";
    return;
  }
  if (is_poly_matrix(value)) {
    out << "\n";
    for (const auto& row : value) {
      out << pad << "[";
      for (std::size_t j = 0; j < row.size(); ++j)
        out << (j ? ", " : "") << to_string(poly_from_json(row[j]));
      out << "]\n";
    }
    return;
  }
  if (value.is_object()) {
    out << "\n";
    for (const auto& [k, v] : value.items()) {
      out << pad << k << ": ";
      render_value(out, v, indent + 2);
    }
  } else if (value.is_array() && !value.empty() && (value.front().is_object())) {
    out << "\n";
    for (const auto& v : value) {
      out << pad << "-";
      render_value(out, v, indent + 2);
    }
  } else if (value.is_string()) {
    out << value.get<std::string>() << "\n";
  } else {
    out << value.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << report.command;
  for (const auto& [k, v] : report.inputs.items())
    out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  out << "\n";
  for (const auto& [k, v] : report.results.items()) {
    out << "  " << k << ": ";
    render_value(out, v, 4);
  }
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const auto& c : report.checks) {
      out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (c.pass)
        out << ": " << c.actual << "\n";
      else
        out << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const Check& c) { return !c.pass; });
    out << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                        : std::to_string(failed) + " of " +
                              std::to_string(report.checks.size()) + " checks FAILED")
        << "\n";
  }
  return out.str();
}

}  // namespace bmv
