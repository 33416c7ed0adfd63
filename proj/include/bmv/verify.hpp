#pragma once

#include "bmv/report.hpp"

#include <string>
#include <vector>

namespace bmv {

struct VerifyOptions {
  int n = 5;  ///< classification section only
  int m = 5;
  unsigned threads = 1;
};

/// Normal form, clustered closed form, commutator.
Report verify_section_normal_form();
/// The three benchmark words, each by all kappa methods.
Report verify_section_table1();
/// Order-x^4 classification with averaged and ratio leading terms.
Report verify_section_classification(const VerifyOptions& options);
/// (5,5) average, gap polynomial and its sign, and the Newton identity suite.
Report verify_section_appendix();

/// Runs a section by name ("normal-form", "table1", "classification",
/// "appendix" or "all"); throws RangeError for unknown names.
Report run_verify(const std::string& section, const VerifyOptions& options = {});

}  // namespace bmv
