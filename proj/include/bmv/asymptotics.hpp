#pragma once

#include "bmv/poly.hpp"
#include "bmv/serialize.hpp"
#include "bmv/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bmv {

enum class Projection : std::uint8_t { P, U, V, Q };

char to_char(Projection p);

/// One summand of the run-by-run projection expansion of a word trace.
struct WalkAssignment {
  std::vector<Projection> sigma;  ///< per A-run, P or U
  std::vector<Projection> tau;    ///< per B-run, V or Q
  int weight = 0;                 ///< sum of U-assigned a_i plus V-assigned b_i
  Rational trace_value;           ///< tr(sigma_1 tau_1 ... sigma_r tau_r)

  /// Interleaved "PVUQUV" form.
  std::string pattern() const;
};

/// A subset S of the run cycle with its closed predecessor neighbourhood.
struct BridgeSubset {
  std::vector<int> subset;  ///< 1-based run indices, ascending
  std::vector<int> gamma;   ///< {i : i in S or i+1 in S}, indices mod r
  int cost = 0;
};

enum class KappaMethod { brute, walks, bridge };

std::string to_string(KappaMethod m);

struct KappaResult {
  int kappa = 0;
  /// Coefficient of x^kappa; the bridge formula yields no coefficient.
  std::optional<Rational> leading_coefficient;
  KappaMethod method = KappaMethod::brute;
  std::vector<WalkAssignment> walk_minimizers;
  std::vector<BridgeSubset> bridge_minimizers;
};

struct SearchLimits {
  int max_walk_runs = 16;
  int max_bridge_runs = 24;
};

/// Valuation of the directly computed word trace.
KappaResult kappa_brute(const Word& w);

/// Every assignment with nonzero trace, in lexicographic (P<U, V<Q) order.
/// Admissibility is decided by the exact product of the chosen projections.
std::vector<WalkAssignment> walk_expansion(const Word& w, const SearchLimits& limits = {});

/// Sum of (2x)^weight * trace_value over the assignments.
Poly expansion_sum(const std::vector<WalkAssignment>& walks);

KappaResult kappa_walks(const Word& w, const SearchLimits& limits = {});

/// kappa = min over S of sum_{i not in S} a_i + sum_{i in Gamma(S)} b_i.
KappaResult kappa_bridge(const RunForm& rf, const SearchLimits& limits = {});

BridgeSubset make_bridge_subset(const RunForm& rf, const std::vector<int>& subset);

/// A^(n-2) B A B^(m-2) A B.
Word bridge_word(int n, int m);

struct Order4Classification {
  int n = 0;
  int m = 0;
  std::uint64_t total = 0;
  int min_kappa = 0;
  std::vector<Word> order4;                 ///< words with kappa == 4, lexicographic
  std::map<int, std::uint64_t> histogram;   ///< kappa -> number of words
};

/// {"word", "kappa", "leading_coefficient", "method", "minimizers"}; the
/// coefficient is null for the bridge method.
Json kappa_to_json(const Word& w, const KappaResult& result);

/// Sweeps every word with n A's and m B's (n, m >= 5) and collects kappa = 4.
Order4Classification classify_order4(int n, int m, unsigned threads = 1);

}  // namespace bmv
