#pragma once

#include "bmv/serialize.hpp"

#include <concepts>
#include <string>
#include <vector>

namespace bmv {

/// One verified claim: both sides are kept so a failure is self-explaining.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

Check make_check(std::string name, const std::string& expected, const std::string& actual);
Check make_check(std::string name, const Poly& expected, const Poly& actual);
Check make_check(std::string name, const Rational& expected, const Rational& actual);
Check make_check(std::string name, bool expected, bool actual);

template <std::integral T, std::integral U>
  requires(!std::same_as<T, bool> && !std::same_as<U, bool>)
Check make_check(std::string name, T expected, U actual) {
  return {std::move(name), std::to_string(expected), std::to_string(actual),
          static_cast<long long>(expected) == static_cast<long long>(actual)};
}
bool all_pass(const std::vector<Check>& checks);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;

  bool passed() const { return all_pass(checks); }
};

Json to_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace bmv
