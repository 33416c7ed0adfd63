#include "bmv/words.hpp"

#include "bmv/errors.hpp"
#include "bmv/family.hpp"

#include <array>
#include <bit>
#include <cctype>

namespace bmv {

namespace {

std::uint64_t mask_for(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

// Pascal triangle up to 64; C(64, 32) still fits in 64 bits.
const std::array<std::array<std::uint64_t, 65>, 65>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return pascal()[n][k];
}

// Next larger integer with the same popcount.
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

Word::Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxLength)
    throw RangeError("word length must be in [0, 64], got " + std::to_string(length));
  if ((bits & ~mask_for(length)) != 0) throw RangeError("word bits exceed its length");
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  if (letters.size() > kMaxLength) throw RangeError("word longer than 64 letters");
  std::uint64_t bits = 0;
  for (Letter l : letters) bits = (bits << 1) | static_cast<std::uint64_t>(l);
  return Word(bits, static_cast<int>(letters.size()));
}

int Word::count_b() const noexcept { return std::popcount(bits_); }

Word Word::rotated(int k) const {
  if (length_ == 0) return *this;
  k %= length_;
  if (k < 0) k += length_;
  if (k == 0) return *this;
  const std::uint64_t rot = (bits_ << k) | (bits_ >> (length_ - k));
  return Word(rot & mask_for(length_), length_);
}

Word Word::reversed() const {
  std::uint64_t r = 0;
  for (int i = 0; i < length_; ++i) r |= ((bits_ >> i) & 1u) << (length_ - 1 - i);
  return Word(r, length_);
}

Word Word::swapped() const { return Word(bits_ ^ mask_for(length_), length_); }

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'A' && c != 'B')
      throw ParseError(std::string("unexpected character '") + c + "' in word", i);
    const Letter letter = c == 'A' ? Letter::A : Letter::B;
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t start = ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("missing exponent after '^'", start);
      if (i - start > 3) throw ParseError("exponent too large", start);
      exponent = std::stol(std::string(text.substr(start, i - start)));
      if (exponent < 1) throw ParseError("exponent must be >= 1", start);
    }
    if (letters.size() + static_cast<std::size_t>(exponent) > Word::kMaxLength)
      throw ParseError("word longer than 64 letters", i);
    letters.insert(letters.end(), static_cast<std::size_t>(exponent), letter);
  }
  if (letters.empty()) throw ParseError("empty word", 0);
  return Word::from_letters(letters);
}

std::string to_plain_string(const Word& w) {
  std::string s;
  s.reserve(static_cast<std::size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) s.push_back(w[i] == Letter::A ? 'A' : 'B');
  return s;
}

std::string to_string(const Word& w) {
  std::vector<std::pair<char, int>> runs;
  for (int i = 0; i < w.size(); ++i) {
    const char c = w[i] == Letter::A ? 'A' : 'B';
    if (!runs.empty() && runs.back().first == c)
      ++runs.back().second;
    else
      runs.emplace_back(c, 1);
  }
  bool long_run = false;
  for (const auto& run : runs) long_run = long_run || run.second >= 3;
  if (!long_run) return to_plain_string(w);
  std::string s;
  for (const auto& [c, len] : runs) {
    if (!s.empty()) s.push_back(' ');
    s.push_back(c);
    if (len > 1) s += "^" + std::to_string(len);
  }
  return s;
}

WordEnumeration::WordEnumeration(int n, int m) : n_(n), m_(m) {
  if (n < 0 || m < 0 || n + m < 1)
    throw RangeError("enumeration needs n, m >= 0 and n + m >= 1");
  if (n + m > Word::kMaxLength) throw RangeError("words longer than 64 letters");
  count_ = choose(n + m, m);
}

Word WordEnumeration::unrank(std::uint64_t rank) const {
  if (rank >= count_) throw RangeError("word rank out of range");
  const int length = n_ + m_;
  int a_left = n_;
  std::uint64_t bits = 0;
  for (int i = 0; i < length; ++i) {
    const int remaining = length - i;
    // Words that put an A here.
    const std::uint64_t with_a = a_left > 0 ? choose(remaining - 1, a_left - 1) : 0;
    bits <<= 1;
    if (rank < with_a) {
      --a_left;
    } else {
      rank -= with_a;
      bits |= 1u;
    }
  }
  return Word(bits, length);
}

void WordEnumeration::for_each(std::uint64_t first, std::uint64_t last,
                               const std::function<void(const Word&)>& fn) const {
  if (last > count_) last = count_;
  if (first >= last) return;
  const int length = n_ + m_;
  std::uint64_t bits = unrank(first).bits();
  for (std::uint64_t r = first; r < last; ++r) {
    fn(Word(bits, length));
    if (r + 1 < last) bits = next_same_popcount(bits);
  }
}

std::vector<Word> WordEnumeration::words() const {
  std::vector<Word> out;
  out.reserve(count_);
  for_each([&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> WordEnumeration::partition(unsigned k) const {
  if (k == 0) k = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  const std::uint64_t base = count_ / k, extra = count_ % k;
  std::uint64_t start = 0;
  for (unsigned i = 0; i < k; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    ranges.emplace_back(start, start + len);
    start += len;
  }
  return ranges;
}

std::vector<Word> enumerate_words(int n, int m) { return WordEnumeration(n, m).words(); }

Word RunForm::rotated_word() const {
  std::vector<Letter> letters;
  for (int i = 0; i < r; ++i) {
    letters.insert(letters.end(), static_cast<std::size_t>(a[i]), Letter::A);
    letters.insert(letters.end(), static_cast<std::size_t>(b[i]), Letter::B);
  }
  return Word::from_letters(letters);
}

Word RunForm::original_word() const {
  const Word w = rotated_word();
  return w.rotated(w.size() - rotation_offset);
}

RunForm run_decomposition(const Word& w) {
  if (!w.has_both_letters())
    throw SingleLetterWord("run decomposition needs both letters: " + to_string(w));
  const int length = w.size();
  int start = 0;
  while (!(w[start] == Letter::A && w[(start + length - 1) % length] == Letter::B)) ++start;

  RunForm rf;
  rf.rotation_offset = start;
  const Word rot = w.rotated(start);
  int i = 0;
  while (i < length) {
    int a = 0, b = 0;
    while (i < length && rot[i] == Letter::A) ++a, ++i;
    while (i < length && rot[i] == Letter::B) ++b, ++i;
    rf.a.push_back(a);
    rf.b.push_back(b);
  }
  rf.r = static_cast<int>(rf.a.size());
  return rf;
}

std::set<Word> cyclic_shifts(const Word& w) {
  std::set<Word> shifts;
  for (int k = 0; k < std::max(w.size(), 1); ++k) shifts.insert(w.rotated(k));
  return shifts;
}

Poly word_trace(const Word& w) {
  if (w.size() < 1) throw RangeError("word_trace of the empty word");
  static const Family family = build_family();
  auto letter_matrix = [&](Letter l) -> const Mat3& { return l == Letter::A ? family.a : family.b; };
  Mat3 acc = letter_matrix(w[0]);
  for (int i = 1; i < w.size(); ++i) acc = (acc * letter_matrix(w[i])).eval();
  return trace(acc);
}

}  // namespace bmv
