#include "bmv/asymptotics.hpp"

#include "bmv/errors.hpp"
#include "bmv/family.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>

namespace bmv {

char to_char(Projection p) {
  switch (p) {
    case Projection::P: return 'P';
    case Projection::U: return 'U';
    case Projection::V: return 'V';
    case Projection::Q: return 'Q';
  }
  return '?';
}

std::string WalkAssignment::pattern() const {
  std::string s;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    s.push_back(to_char(sigma[i]));
    s.push_back(to_char(tau[i]));
  }
  return s;
}

std::string to_string(KappaMethod m) {
  switch (m) {
    case KappaMethod::brute: return "brute";
    case KappaMethod::walks: return "walks";
    case KappaMethod::bridge: return "bridge";
  }
  return "unknown";
}

KappaResult kappa_brute(const Word& w) {
  if (!w.has_both_letters()) throw SingleLetterWord("kappa needs both letters: " + to_string(w));
  const Valuation v = valuation(word_trace(w));
  KappaResult result;
  result.kappa = v.degree;
  result.leading_coefficient = v.coefficient;
  result.method = KappaMethod::brute;
  return result;
}

namespace {

struct WalkSearch {
  const RunForm& rf;
  const ProjectionSet& proj;
  std::vector<WalkAssignment>& out;
  std::vector<Projection> sigma, tau;

  const RationalMat3& matrix(Projection p) const {
    switch (p) {
      case Projection::P: return proj.p;
      case Projection::U: return proj.u;
      case Projection::V: return proj.v;
      case Projection::Q: return proj.q;
    }
    return proj.p;
  }

  // position 2i chooses sigma_i from {P, U}; 2i+1 chooses tau_i from {V, Q}.
  void descend(int position, const RationalMat3& prefix, int weight) {
    if (position == 2 * rf.r) {
      Rational tr = trace(prefix);
      if (tr != 0) out.push_back({sigma, tau, weight, std::move(tr)});
      return;
    }
    const int run = position / 2;
    const bool a_run = position % 2 == 0;
    const Projection choices[2] = {a_run ? Projection::P : Projection::V,
                                   a_run ? Projection::U : Projection::Q};
    for (Projection choice : choices) {
      RationalMat3 next = position == 0 ? matrix(choice) : (prefix * matrix(choice)).eval();
      // Every extension of a vanishing product vanishes.
      if (is_zero(next)) continue;
      int added = 0;
      if (choice == Projection::U) added = rf.a[run];
      if (choice == Projection::V) added = rf.b[run];
      (a_run ? sigma : tau).push_back(choice);
      descend(position + 1, next, weight + added);
      (a_run ? sigma : tau).pop_back();
    }
  }
};

}  // namespace

std::vector<WalkAssignment> walk_expansion(const Word& w, const SearchLimits& limits) {
  const RunForm rf = run_decomposition(w);
  if (rf.r > limits.max_walk_runs)
    throw ComplexityGuard("walk expansion over " + std::to_string(rf.r) + " runs exceeds cap " +
                          std::to_string(limits.max_walk_runs));
  static const ProjectionSet proj = build_projections();
  std::vector<WalkAssignment> out;
  WalkSearch search{rf, proj, out, {}, {}};
  search.descend(0, RationalMat3::Identity(), 0);
  return out;
}

Poly expansion_sum(const std::vector<WalkAssignment>& walks) {
  const Poly eps = scale(Poly::x(), 2);
  Poly sum;
  for (const auto& walk : walks) sum += scale(pow(eps, walk.weight), walk.trace_value);
  return sum;
}

KappaResult kappa_walks(const Word& w, const SearchLimits& limits) {
  const std::vector<WalkAssignment> walks = walk_expansion(w, limits);
  if (walks.empty()) throw ZeroPolynomial("no admissible assignment for " + to_string(w));
  int best = std::numeric_limits<int>::max();
  for (const auto& walk : walks) best = std::min(best, walk.weight);

  KappaResult result;
  result.kappa = best;
  result.method = KappaMethod::walks;
  Rational total = 0;
  for (const auto& walk : walks) {
    if (walk.weight != best) continue;
    total += walk.trace_value;
    result.walk_minimizers.push_back(walk);
  }
  result.leading_coefficient = Rational(pow2(best)) * total;
  return result;
}

BridgeSubset make_bridge_subset(const RunForm& rf, const std::vector<int>& subset) {
  std::vector<bool> in_s(static_cast<std::size_t>(rf.r), false);
  for (int i : subset) {
    if (i < 1 || i > rf.r) throw RangeError("bridge subset index out of range");
    in_s[static_cast<std::size_t>(i - 1)] = true;
  }
  BridgeSubset bs;
  for (int i = 0; i < rf.r; ++i) {
    if (in_s[i]) bs.subset.push_back(i + 1);
    else bs.cost += rf.a[i];
    if (in_s[i] || in_s[(i + 1) % rf.r]) {
      bs.gamma.push_back(i + 1);
      bs.cost += rf.b[i];
    }
  }
  return bs;
}

KappaResult kappa_bridge(const RunForm& rf, const SearchLimits& limits) {
  if (rf.r < 1 || static_cast<int>(rf.a.size()) != rf.r || static_cast<int>(rf.b.size()) != rf.r)
    throw RangeError("malformed run form");
  for (int i = 0; i < rf.r; ++i)
    if (rf.a[i] < 1 || rf.b[i] < 1) throw RangeError("run lengths must be >= 1");
  if (rf.r > limits.max_bridge_runs)
    throw ComplexityGuard("bridge search over " + std::to_string(rf.r) + " runs exceeds cap " +
                          std::to_string(limits.max_bridge_runs));

  const std::uint64_t subsets = std::uint64_t{1} << rf.r;
  int best = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> minimizers;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    int cost = 0;
    for (int i = 0; i < rf.r; ++i) {
      const bool in_i = (mask >> i) & 1u;
      const bool in_next = (mask >> ((i + 1) % rf.r)) & 1u;
      if (!in_i) cost += rf.a[i];
      if (in_i || in_next) cost += rf.b[i];
    }
    if (cost < best) {
      best = cost;
      minimizers.clear();
    }
    if (cost == best) minimizers.push_back(mask);
  }

  KappaResult result;
  result.kappa = best;
  result.method = KappaMethod::bridge;
  for (std::uint64_t mask : minimizers) {
    std::vector<int> subset;
    for (int i = 0; i < rf.r; ++i)
      if ((mask >> i) & 1u) subset.push_back(i + 1);
    result.bridge_minimizers.push_back(make_bridge_subset(rf, subset));
  }
  std::sort(result.bridge_minimizers.begin(), result.bridge_minimizers.end(),
            [](const BridgeSubset& x, const BridgeSubset& y) { return x.subset < y.subset; });
  return result;
}

Word bridge_word(int n, int m) {
  if (n < 2 || m < 2) throw RangeError("bridge word needs n, m >= 2");
  std::vector<Letter> letters(static_cast<std::size_t>(n - 2), Letter::A);
  letters.push_back(Letter::B);
  letters.push_back(Letter::A);
  letters.insert(letters.end(), static_cast<std::size_t>(m - 2), Letter::B);
  letters.push_back(Letter::A);
  letters.push_back(Letter::B);
  return Word::from_letters(letters);
}

Order4Classification classify_order4(int n, int m, unsigned threads) {
  if (n < 5 || m < 5)
    throw RangeError("order-4 classification holds for n, m >= 5 (got " + std::to_string(n) +
                     ", " + std::to_string(m) + ")");
  const WordEnumeration words(n, m);
  Order4Classification result;
  result.n = n;
  result.m = m;
  result.total = words.count();
  result.min_kappa = std::numeric_limits<int>::max();

  std::mutex merge;
  auto sweep = [&](std::uint64_t first, std::uint64_t last) {
    std::map<int, std::uint64_t> histogram;
    std::vector<Word> order4;
    words.for_each(first, last, [&](const Word& w) {
      const int kappa = valuation(word_trace(w)).degree;
      ++histogram[kappa];
      if (kappa == 4) order4.push_back(w);
    });
    std::lock_guard lock(merge);
    for (const auto& [k, c] : histogram) result.histogram[k] += c;
    result.order4.insert(result.order4.end(), order4.begin(), order4.end());
  };

  const auto ranges = words.partition(std::max(threads, 1u));
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 1; i < ranges.size(); ++i)
      workers.emplace_back(sweep, ranges[i].first, ranges[i].second);
    sweep(ranges[0].first, ranges[0].second);
  }
  std::sort(result.order4.begin(), result.order4.end());
  if (!result.histogram.empty()) result.min_kappa = result.histogram.begin()->first;
  return result;
}

}  // namespace bmv

namespace bmv {

Json kappa_to_json(const Word& w, const KappaResult& result) {
  Json j;
  j["word"] = to_string(w);
  j["kappa"] = result.kappa;
  j["leading_coefficient"] =
      result.leading_coefficient ? Json(to_string(*result.leading_coefficient)) : Json(nullptr);
  j["method"] = to_string(result.method);
  Json minimizers = Json::array();
  for (const auto& walk : result.walk_minimizers) {
    Json m;
    m["pattern"] = walk.pattern();
    m["weight"] = walk.weight;
    m["trace"] = to_string(walk.trace_value);
    minimizers.push_back(std::move(m));
  }
  for (const auto& bridge : result.bridge_minimizers) {
    Json m;
    m["S"] = bridge.subset;
    m["gamma"] = bridge.gamma;
    m["cost"] = bridge.cost;
    minimizers.push_back(std::move(m));
  }
  j["minimizers"] = std::move(minimizers);
  return j;
}

}  // namespace bmv
