#pragma once

#include "bmv/bipoly.hpp"
#include "bmv/poly.hpp"
#include "bmv/report.hpp"

#include <string>
#include <vector>

namespace bmv {

enum class EnsembleMethod { word_sum, newton };

std::string to_string(EnsembleMethod m);

/// Exact normalized word average p_{n,m}(A_x, B_x).
struct EnsembleResult {
  int n = 0;
  int m = 0;
  Poly p;
  EnsembleMethod method = EnsembleMethod::word_sum;
  Integer word_count;
};

/// {"n", "m", "method", "word_count", "p"}.
Json ensemble_to_json(const EnsembleResult& result);

struct WordSumOptions {
  /// Upper bound on binomial(n+m, n); the default admits every n+m <= 20.
  std::uint64_t max_words = 184756;
  unsigned threads = 1;
};

EnsembleResult p_word_sum(int n, int m, const WordSumOptions& options = {});

/// Characteristic polynomial data of M = tA + sB.
struct CharPolyData {
  BiPoly e1, e2, e3;  ///< computed directly from M
  Poly alpha, beta, delta, gamma;
  /// e1 = alpha u, e2 = delta v + beta w, e3 = gamma u w with u = t+s,
  /// v = t^2+s^2, w = ts, rebuilt independently and compared to e1..e3.
  bool factored_forms_agree = false;
};

CharPolyData char_poly_data();

/// tr(M^k) from a_k = e1 a_{k-1} - e2 a_{k-2} + e3 a_{k-3}.
BiPoly power_sum_newton(int k);

/// [t^n s^m] tr(M^(n+m)) / binomial(n+m, n).
EnsembleResult p_newton(int n, int m);

/// [t^n s^m] u^a v^b w^c = sum_j binom(b, j) binom(a, n - c - 2j); needs
/// a + 2b + 2c = n + m.
Rational coeff_extract_uvw(int a, int b, int c, int n, int m);

/// The hardcoded degree-10 Newton identity, the fourteen [t^5 s^5]
/// extraction identities, the assembled coefficient, and its simplification.
std::vector<Check> verify_newton10_hardcoded();

/// tr(A^n B^m) - p_{n,m}; both routes to p must agree.
Poly gap(int n, int m, const WordSumOptions& options = {});

struct SignSample {
  Rational x;
  int sign = 0;
};

/// Rational interval [lo, hi] on which the gap changes sign.
struct SignBracket {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;
};

struct GapScan {
  std::vector<SignSample> samples;
  std::vector<SignBracket> brackets;
};

/// Signs on the uniform grid x_lo + i (x_hi - x_lo) / steps, i = 0..steps,
/// with each sign change refined by exact bisection to width <= max_width.
GapScan gap_sign_scan(const Poly& gap_poly, const Rational& x_lo, const Rational& x_hi,
                      int steps, const Rational& max_width = Rational(1) / Rational(1000000000));

GapScan gap_sign_scan(int n, int m, const Rational& x_lo, const Rational& x_hi, int steps,
                      const WordSumOptions& options = {});

/// Header "x_num,x_den,sign" and one row per grid sample.
std::string scan_to_csv(const GapScan& scan);

struct RatioLeading {
  int exponent = 0;
  Rational coefficient;
};

/// Leading term of p_{n,m} / tr(A^n B^m) from the closed form, cross-checked
/// against the exact polynomials; n, m >= 5.
RatioLeading ratio_leading(int n, int m);

/// Leading term of num/den read from the valuations of two polynomials.
RatioLeading ratio_leading_exact(const Poly& numerator, const Poly& denominator);

}  // namespace bmv
