#pragma once

// Words over [k] = {1..k}: avoidance of the consecutive patterns z,z+1,z and
// z,z,z+1, and words in which no repeat repeats the previous repeated letter.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqproof/core.hpp"

namespace seqproof {

enum class PatternKind { ZP1Z, ZZP1, RepeatedLetter };

inline std::string to_string(PatternKind p) {
  switch (p) {
    case PatternKind::ZP1Z: return "zp1z";
    case PatternKind::ZZP1: return "zzp1";
    case PatternKind::RepeatedLetter: return "repeated";
  }
  return "?";
}

inline PatternKind parse_pattern(const std::string& name) {
  if (name == "zp1z") return PatternKind::ZP1Z;
  if (name == "zzp1") return PatternKind::ZZP1;
  if (name == "repeated" || name == "repeated-letter") return PatternKind::RepeatedLetter;
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

// Predicate applied by the brute-force oracle.
inline bool word_admissible(const std::vector<int>& w, PatternKind pattern) {
  switch (pattern) {
    case PatternKind::ZP1Z:
      for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i + 1] == w[i] + 1 && w[i + 2] == w[i]) return false;
      return true;
    case PatternKind::ZZP1:
      for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i + 1] == w[i] && w[i + 2] == w[i] + 1) return false;
      return true;
    case PatternKind::RepeatedLetter: {
      int last_repeat = 0;  // 0: no repeat seen yet
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] != w[i - 1]) continue;
        if (w[i] == last_repeat) return false;
        last_repeat = w[i];
      }
      return true;
    }
  }
  return false;
}

// Counts admissible words by enumerating all k^n of them.
inline BigInt words_oracle(unsigned k, unsigned n, PatternKind pattern, std::uint64_t enumeration_cap = 10'000'000) {
  if (k < 2) throw std::invalid_argument("words_oracle: k must be >= 2");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > enumeration_cap / k)
      throw ResourceCap("words_oracle: k^n exceeds " + std::to_string(enumeration_cap));
    total *= k;
  }
  std::vector<int> w(n, 1);
  std::uint64_t count = 0;
  for (std::uint64_t visited = 0; visited < total; ++visited) {
    if (word_admissible(w, pattern)) ++count;
    for (std::size_t i = n; i-- > 0;) {
      if (w[i] < static_cast<int>(k)) {
        ++w[i];
        break;
      }
      w[i] = 1;
    }
  }
  return BigInt(static_cast<unsigned long>(count));
}

namespace detail {

// f[u][v]: admissible words ending in letters u, v (0-based). One step
// appends a letter: f'[u][v] = sum_t f[t][u] - (forbidden t, u, v term).
inline BigInt words_two_letter_dp(unsigned k, unsigned n, PatternKind pattern) {
  if (n == 0) return 1;
  if (n == 1) return k;
  std::vector<std::vector<BigInt>> f(k, std::vector<BigInt>(k, BigInt(1)));
  for (unsigned len = 3; len <= n; ++len) {
    std::vector<BigInt> into(k);  // into[u] = sum_t f[t][u]
    for (unsigned t = 0; t < k; ++t)
      for (unsigned u = 0; u < k; ++u) into[u] += f[t][u];
    std::vector<std::vector<BigInt>> next(k, std::vector<BigInt>(k));
    for (unsigned u = 0; u < k; ++u) {
      for (unsigned v = 0; v < k; ++v) {
        next[u][v] = into[u];
        if (pattern == PatternKind::ZP1Z && u >= 1 && v == u - 1) next[u][v] -= f[u - 1][u];
        if (pattern == PatternKind::ZZP1 && v == u + 1) next[u][v] -= f[u][u];
      }
    }
    f = std::move(next);
  }
  BigInt total = 0;
  for (const auto& row : f)
    for (const auto& x : row) total += x;
  return total;
}

// g[u][v]: words whose last repeated letter is u (0 = none, else 1..k) and
// whose last letter is v (1..k).
inline BigInt words_repeated_letter_dp(unsigned k, unsigned n) {
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> g(k + 1, std::vector<BigInt>(k + 1));
  for (unsigned v = 1; v <= k; ++v) g[0][v] = 1;
  for (unsigned len = 2; len <= n; ++len) {
    std::vector<std::vector<BigInt>> next(k + 1, std::vector<BigInt>(k + 1));
    for (unsigned u = 0; u <= k; ++u) {
      for (unsigned v = 1; v <= k; ++v) {
        BigInt acc = 0;
        for (unsigned t = 1; t <= k; ++t)
          if (t != v) acc += g[u][t];
        if (u == v) {
          for (unsigned t = 0; t <= k; ++t)
            if (t != v) acc += g[t][u];
        }
        next[u][v] = std::move(acc);
      }
    }
    g = std::move(next);
  }
  BigInt total = 0;
  for (const auto& row : g)
    for (const auto& x : row) total += x;
  return total;
}

}  // namespace detail

// Polynomial-time count over last-letters state, O(n k^2) to O(n k^3).
inline BigInt words_dp(unsigned k, unsigned n, PatternKind pattern) {
  if (k < 2) throw std::invalid_argument("words_dp: k must be >= 2");
  if (pattern == PatternKind::RepeatedLetter) return detail::words_repeated_letter_dp(k, n);
  return detail::words_two_letter_dp(k, n, pattern);
}

// f(n) = k f(n-1) - f(n-2) + f(n-3), with f(0) = 1, f(1) = k, f(2) = k^2.
inline BigInt words_zp1z_closed(unsigned k, unsigned n) {
  if (k < 2) throw std::invalid_argument("words_zp1z_closed: k must be >= 2");
  std::vector<BigInt> f = {BigInt(1), BigInt(k), BigInt(k * k)};
  for (unsigned i = 3; i <= n; ++i) f.push_back(BigInt(k * f[i - 1] - f[i - 2] + f[i - 3]));
  return f[n];
}

// 1 - sum_{i=0}^{k-1} (-1)^i (k - i) x^(2i+1)
inline IntPolynomial zzp1_reduced_denominator(unsigned k) {
  std::vector<BigInt> c(2 * k);
  c[0] = 1;
  for (unsigned i = 0; i < k; ++i) c[2 * i + 1] = i % 2 == 0 ? -static_cast<long>(k - i) : static_cast<long>(k - i);
  return IntPolynomial(std::move(c));
}

// 1 - k x + x^2 - sum_{i=1}^{k} (-1)^(i+1) x^(2i+1)
inline IntPolynomial zzp1_full_denominator(unsigned k) {
  std::vector<BigInt> c(2 * k + 2);
  c[0] = 1;
  c[1] = -static_cast<long>(k);
  c[2] = 1;
  for (unsigned i = 1; i <= k; ++i) c[2 * i + 1] += i % 2 == 1 ? -1 : 1;
  return IntPolynomial(std::move(c));
}

inline RationalGF zzp1_gf(unsigned k) { return {IntPolynomial{1}, zzp1_reduced_denominator(k)}; }

inline RationalGF zp1z_gf(unsigned k) { return {IntPolynomial{1, 0, 1}, IntPolynomial{1, -static_cast<long>(k), 1, -1}}; }

inline BigInt words_zzp1_closed(unsigned k, unsigned n) {
  if (k < 2) throw std::invalid_argument("words_zzp1_closed: k must be >= 2");
  return gf_coefficients(zzp1_gf(k), n)[n];
}

// -((k-2)x^3 + 2(k-2)x^2 + (k-3)x - 1) / (2(k-1)^2 x^3 + (k-1)(k-4)x^2 + (3-2k)x + 1)
inline RationalGF repeated_letter_gf(unsigned k_in) {
  if (k_in < 2) throw std::invalid_argument("repeated_letter_gf: k must be >= 2");
  const long k = k_in;
  IntPolynomial numerator{1, -(k - 3), -2 * (k - 2), -(k - 2)};
  IntPolynomial denominator{1, 3 - 2 * k, (k - 1) * (k - 4), 2 * (k - 1) * (k - 1)};
  return {numerator, denominator};
}

// Closed path per pattern: recurrence for z,z+1,z and the rational GFs
// for the other two.
inline BigInt words_closed(unsigned k, unsigned n, PatternKind pattern) {
  switch (pattern) {
    case PatternKind::ZP1Z: return words_zp1z_closed(k, n);
    case PatternKind::ZZP1: return words_zzp1_closed(k, n);
    case PatternKind::RepeatedLetter: return gf_coefficients(repeated_letter_gf(k), n)[n];
  }
  throw std::invalid_argument("words_closed: bad pattern");
}

// Sequence form of words_closed for n = 0..n_max.
inline std::vector<BigInt> words_closed_prefix(unsigned k, std::size_t n_max, PatternKind pattern) {
  switch (pattern) {
    case PatternKind::ZP1Z: {
      std::vector<BigInt> f = {BigInt(1), BigInt(k), BigInt(k * k)};
      for (std::size_t i = 3; i <= n_max; ++i) f.push_back(BigInt(k * f[i - 1] - f[i - 2] + f[i - 3]));
      f.resize(n_max + 1);
      return f;
    }
    case PatternKind::ZZP1: return gf_coefficients(zzp1_gf(k), n_max);
    case PatternKind::RepeatedLetter: return gf_coefficients(repeated_letter_gf(k), n_max);
  }
  throw std::invalid_argument("words_closed_prefix: bad pattern");
}

}  // namespace seqproof
