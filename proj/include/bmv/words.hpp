#pragma once

#include "bmv/poly.hpp"
#include "bmv/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmv {

enum class Letter : std::uint8_t { A = 0, B = 1 };

/// Binary word over {A, B}, packed into a 64-bit mask (A = 0, B = 1).
///
/// Letter i lives at bit (size - 1 - i), so for equal lengths the integer
/// order of the masks is the lexicographic order with A < B.
class Word {
 public:
  static constexpr int kMaxLength = 64;

  Word() = default;
  Word(std::uint64_t bits, int length);
  static Word from_letters(const std::vector<Letter>& letters);

  int size() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  Letter operator[](int i) const noexcept {
    return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1u);
  }
  int count_a() const noexcept { return length_ - count_b(); }
  int count_b() const noexcept;
  bool has_both_letters() const noexcept { return count_a() > 0 && count_b() > 0; }

  /// Left rotation: result[j] = (*this)[(j + k) mod size].
  Word rotated(int k) const;
  Word reversed() const;
  /// Exchanges A and B.
  Word swapped() const;

  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// Parses plain letters ("AAABAB") or run shorthand ("A^3 B A B^3 A B").
Word parse_word(std::string_view text);

/// Run shorthand if some run has length >= 3, otherwise plain letters.
std::string to_string(const Word& w);
std::string to_plain_string(const Word& w);

/// Lexicographic stream over all words with n letters A and m letters B.
///
/// Ranks are positions in that order, so [first, last) rank ranges partition
/// the set deterministically for parallel consumers.
class WordEnumeration {
 public:
  WordEnumeration(int n, int m);

  std::uint64_t count() const noexcept { return count_; }
  Word unrank(std::uint64_t rank) const;
  void for_each(std::uint64_t first, std::uint64_t last,
                const std::function<void(const Word&)>& fn) const;
  void for_each(const std::function<void(const Word&)>& fn) const {
    for_each(0, count_, fn);
  }
  std::vector<Word> words() const;
  /// k contiguous, nearly equal rank ranges covering [0, count).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> partition(unsigned k) const;

 private:
  int n_;
  int m_;
  std::uint64_t count_;
};

std::vector<Word> enumerate_words(int n, int m);

/// Cyclic run form A^a1 B^b1 ... A^ar B^br of a word containing both letters.
struct RunForm {
  int r = 0;
  std::vector<int> a;
  std::vector<int> b;
  /// The run form spells the original word rotated left by this amount.
  int rotation_offset = 0;

  /// A^a1 B^b1 ... A^ar B^br, without undoing the rotation.
  Word rotated_word() const;
  /// Rebuilds the word this run form was taken from.
  Word original_word() const;
};

/// Rotates to the earliest A-run whose cyclic predecessor is a B.
RunForm run_decomposition(const Word& w);

std::set<Word> cyclic_shifts(const Word& w);

/// Exact tr W(A_x, B_x) by a strict left-to-right fold of 3x3 products.
Poly word_trace(const Word& w);

}  // namespace bmv
