#include "bmv/errors.hpp"
#include "bmv/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bmv;

namespace {

std::vector<std::string> plain(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_plain_string(w));
  return out;
}

// Every word with both letters, length 2..max_length.
template <typename Fn>
void for_all_mixed_words(int max_length, Fn fn) {
  for (int length = 2; length <= max_length; ++length)
    for (int n = 1; n < length; ++n) WordEnumeration(n, length - n).for_each(fn);
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(plain(enumerate_words(1, 1)) == std::vector<std::string>{"AB", "BA"});
  CHECK(plain(enumerate_words(2, 1)) == std::vector<std::string>{"AAB", "ABA", "BAA"});
  CHECK(enumerate_words(5, 5).size() == 252);
  CHECK(plain(enumerate_words(3, 0)) == std::vector<std::string>{"AAA"});
  CHECK(plain(enumerate_words(0, 2)) == std::vector<std::string>{"BB"});
  CHECK_THROWS_AS(WordEnumeration(0, 0), RangeError);
}

TEST_CASE("enumeration counts, order and distinctness") {
  for (int length = 1; length <= 16; ++length)
    for (int n = 0; n <= length; ++n) {
      const int m = length - n;
      const auto words = enumerate_words(n, m);
      CHECK(words.size() == binomial(length, n).convert_to<std::size_t>());
      CHECK(std::is_sorted(words.begin(), words.end()));
      CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
      for (const auto& w : words) {
        CHECK(w.count_a() == n);
        CHECK(w.count_b() == m);
      }
    }
}

TEST_CASE("rank partitions cover the enumeration exactly") {
  const WordEnumeration e(6, 5);
  const auto all = e.words();
  for (unsigned k : {1u, 2u, 3u, 7u, 500u}) {
    std::vector<Word> joined;
    for (const auto& [first, last] : e.partition(k))
      e.for_each(first, last, [&](const Word& w) { joined.push_back(w); });
    CHECK(joined == all);
  }
  for (std::uint64_t r = 0; r < e.count(); ++r) CHECK(e.unrank(r) == all[r]);
  CHECK_THROWS_AS(e.unrank(e.count()), RangeError);
}

TEST_CASE("word parsing and printing") {
  const Word w = parse_word("A^3 B A B^3 A B");
  CHECK(to_plain_string(w) == "AAABABBBAB");
  CHECK(parse_word("AAABABBBAB") == w);
  CHECK(parse_word("A^3BAB^3AB") == w);
  CHECK(to_string(w) == "A^3 B A B^3 A B");
  CHECK(to_string(parse_word("ABABABABAB")) == "ABABABABAB");
  CHECK(to_string(parse_word("AABB")) == "AABB");
  CHECK(to_string(parse_word("A^5 B^5")) == "A^5 B^5");
  CHECK(to_string(parse_word("A^3 B^2")) == "A^3 B^2");
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("A^0 B"), ParseError);
  CHECK_THROWS_AS(parse_word("A^ B"), ParseError);
  CHECK_THROWS_AS(parse_word("A^40 B^30"), ParseError);
  try {
    parse_word("AB C");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("printing round-trips through the parser") {
  for_all_mixed_words(9, [](const Word& w) {
    CHECK(parse_word(to_string(w)) == w);
    CHECK(parse_word(to_plain_string(w)) == w);
  });
}

TEST_CASE("run decomposition examples") {
  const RunForm bridge = run_decomposition(parse_word("A^3 B A B^3 A B"));
  CHECK(bridge.r == 3);
  CHECK(bridge.a == std::vector<int>{3, 1, 1});
  CHECK(bridge.b == std::vector<int>{1, 3, 1});
  CHECK(bridge.rotation_offset == 0);

  const RunForm alt = run_decomposition(parse_word("ABABABABAB"));
  CHECK(alt.r == 5);
  CHECK(alt.a == std::vector<int>(5, 1));
  CHECK(alt.b == std::vector<int>(5, 1));

  const RunForm rotated = run_decomposition(parse_word("BBAAA"));
  CHECK(rotated.r == 1);
  CHECK(rotated.a == std::vector<int>{3});
  CHECK(rotated.b == std::vector<int>{2});
  CHECK(rotated.rotation_offset == 2);
  CHECK(to_plain_string(rotated.rotated_word()) == "AAABB");

  // index 0 counts when the word ends in B
  const RunForm wrap = run_decomposition(parse_word("ABBAB"));
  CHECK(wrap.rotation_offset == 0);
  CHECK(wrap.a == std::vector<int>{1, 1});
  CHECK(wrap.b == std::vector<int>{2, 1});

  const RunForm later = run_decomposition(parse_word("AABBA"));
  CHECK(later.rotation_offset == 4);
  CHECK(later.a == std::vector<int>{3});

  const RunForm mid = run_decomposition(parse_word("BABAA"));
  CHECK(mid.rotation_offset == 1);
  CHECK(mid.a == std::vector<int>{1, 2});
  CHECK(mid.b == std::vector<int>{1, 1});

  CHECK_THROWS_AS(run_decomposition(parse_word("AAA")), SingleLetterWord);
  CHECK_THROWS_AS(run_decomposition(parse_word("B")), SingleLetterWord);
}

TEST_CASE("run decomposition round-trips") {
  for_all_mixed_words(10, [](const Word& w) {
    const RunForm rf = run_decomposition(w);
    CHECK(rf.original_word() == w);
    int sum_a = 0, sum_b = 0;
    for (int i = 0; i < rf.r; ++i) {
      CHECK(rf.a[i] >= 1);
      CHECK(rf.b[i] >= 1);
      sum_a += rf.a[i];
      sum_b += rf.b[i];
    }
    CHECK(sum_a == w.count_a());
    CHECK(sum_b == w.count_b());
  });
}

TEST_CASE("cyclic shifts") {
  CHECK(cyclic_shifts(parse_word("AB")).size() == 2);
  CHECK(cyclic_shifts(parse_word("A^3 B A B^3 A B")).size() == 10);
  CHECK(cyclic_shifts(parse_word("ABABABABAB")).size() == 2);
  CHECK(cyclic_shifts(parse_word("AAAA")).size() == 1);
  for_all_mixed_words(8, [](const Word& w) { CHECK(w.size() % cyclic_shifts(w).size() == 0); });
}

TEST_CASE("word trace examples") {
  CHECK(word_trace(parse_word("A^5 B^5")) == Poly::from_terms({{5, 32}, {10, 256}}));
  CHECK(word_trace(parse_word("AB")) == Poly::from_terms({{1, 2}, {2, 1}}));
  CHECK(word_trace(parse_word("A^3")) == Poly::from_terms({{0, 1}, {3, 8}}));
  // frozen from an independent symbolic product
  CHECK(word_trace(parse_word("A^3 B A B^3 A B")) ==
        Poly::from_terms({{4, 1}, {5, 8}, {6, 16}, {7, 8}, {8, 64}, {9, 64}, {10, 16}}));
  CHECK(word_trace(parse_word("ABABABABAB")) ==
        Poly::from_terms({{5, 2}, {6, 25}, {7, 50}, {8, 35}, {9, 10}, {10, 1}}));
}

TEST_CASE("trace invariances under rotation, reversal and letter swap") {
  for_all_mixed_words(10, [](const Word& w) {
    const Poly tr = word_trace(w);
    for (int k = 1; k < w.size(); ++k) CHECK(word_trace(w.rotated(k)) == tr);
    CHECK(word_trace(w.reversed()) == tr);
    CHECK(word_trace(w.swapped()) == tr);
  });
}

TEST_CASE("trace coefficients are nonnegative") {
  for (int length = 1; length <= 12; ++length)
    for (int n = 0; n <= length; ++n)
      WordEnumeration(n, length - n).for_each([](const Word& w) {
        const Poly tr = word_trace(w);
        for (const auto& [d, c] : tr.terms()) CHECK(c > 0);
      });
}

TEST_CASE("word bit operations") {
  const Word w = parse_word("AABAB");
  CHECK(to_plain_string(w.rotated(1)) == "ABABA");
  CHECK(to_plain_string(w.rotated(-1)) == "BAABA");
  CHECK(to_plain_string(w.reversed()) == "BABAA");
  CHECK(to_plain_string(w.swapped()) == "BBABA");
  const Word longest = parse_word("A^32 B^32");
  CHECK(longest.size() == 64);
  CHECK(longest.rotated(32) == parse_word("B^32 A^32"));
  CHECK(longest.swapped() == parse_word("B^32 A^32"));
}
