#pragma once

// Euler-Maclaurin flavoured sequences: bit length of the central binomial
// C(2^n, 2^(n-1)), the floor of cube-root sums, and the median absolute
// deviation of the first n squares.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqproof/core.hpp"

namespace seqproof {

// 2^n - floor(n/2).
inline BigInt bits_closed(unsigned n) {
  if (n < 1) throw std::invalid_argument("bits_closed: n must be >= 1");
  return BigInt(pow2(n) - n / 2);
}

// Bit length of the exactly computed C(2^n, 2^(n-1)).
inline BigInt bits_oracle(unsigned n, unsigned max_n = 16) {
  if (n < 1) throw std::invalid_argument("bits_oracle: n must be >= 1");
  if (n > max_n)
    throw ResourceCap("bits_oracle: n = " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
  const unsigned long big = 1ul << n;
  return BigInt(static_cast<unsigned long>(bit_length(binomial(big, big / 2))));
}

namespace detail {

// Encloses sum_{k=first}^{last} log2 k. Up to `head` leading terms are
// folded into one exact product; the rest goes through Euler-Maclaurin,
// whose slack f'(l)/8 shrinks as the starting index grows.
inline RationalInterval log2_range_sum(const BigInt& first, const BigInt& last, unsigned precision_bits,
                                       const PrecisionPolicy& policy, unsigned long head = 16) {
  BigInt product = 1;
  BigInt k = first;
  for (unsigned long i = 0; i < head && k <= last; ++i, ++k) product *= k;
  RationalInterval sum = log2_enclosure(BigRational(product), precision_bits, policy);
  if (k <= last) sum = sum + euler_maclaurin_bounds(SummandKind::Log2, k, last, precision_bits, policy);
  return sum;
}

}  // namespace detail

// Enclosure of log2 C(2^n, 2^(n-1)) as the difference of the log2 sums over
// (2^(n-1), 2^n] and [1, 2^(n-1)].
inline RationalInterval log2_binomial_bounds(unsigned n, unsigned precision_bits,
                                             const PrecisionPolicy& policy = {}) {
  if (n < 2) throw std::invalid_argument("log2_binomial_bounds: n must be >= 2");
  const BigInt top = pow2(n);
  const BigInt half = pow2(n - 1);
  RationalInterval upper_half = detail::log2_range_sum(BigInt(half + 1), top, precision_bits, policy);
  RationalInterval lower_half = detail::log2_range_sum(BigInt(1), half, precision_bits, policy);
  return upper_half - lower_half;
}

// The bracket [2^n - n/2 - 499/1000, 2^n - n/2 - 1/50] the enclosure must sit in.
inline RationalInterval log2_binomial_target_bracket(unsigned n) {
  const BigRational centre = BigRational(pow2(n)) - BigRational(n, 2);
  return {BigRational(centre - BigRational(499, 1000)), BigRational(centre - BigRational(1, 50))};
}

// floor(log2 C(2^n, 2^(n-1))) + 1 read off the enclosure, doubling the
// working precision until the floor is decided.
inline BigInt bits_from_log2_bounds(unsigned n, unsigned precision_bits = 32,
                                    const PrecisionPolicy& policy = {}) {
  for (unsigned p = precision_bits; p <= policy.cap_bits; p *= 2) {
    if (auto f = log2_binomial_bounds(n, p, policy).decided_floor()) return *f + 1;
  }
  throw PrecisionExhausted("bits_from_log2_bounds: floor undecided for n = " + std::to_string(n));
}

// 3 * 10^(4n/3) / 4 + 5 * 10^(n/3 - 1) - 1, for 3 | n.
inline BigInt cbrt_floorsum_closed(unsigned n) {
  if (n % 3 != 0) throw NotDivisibleBy3("cbrt_floorsum_closed: n = " + std::to_string(n));
  if (n < 3) throw std::invalid_argument("cbrt_floorsum_closed: n must be >= 3");
  BigInt big = ipow(BigInt(10), 4 * n / 3);
  BigInt out = 3 * big / 4 + 5 * ipow(BigInt(10), n / 3 - 1) - 1;
  return out;
}

// floor(sum_{i=1}^{m} cbrt(i)). Each cube root is enclosed by its dyadic cell
// of width 2^-p; all cells share the denominator 2^p, so the interval sum is
// kept as two integer numerators. Perfect cubes contribute exactly.
inline BigInt cbrt_floorsum_oracle(std::uint64_t m, unsigned precision_bits = 32,
                                   const PrecisionPolicy& policy = {}) {
  if (m < 1) throw std::invalid_argument("cbrt_floorsum_oracle: m must be >= 1");
  unsigned p = std::max<unsigned>(precision_bits, static_cast<unsigned>(bit_length(BigInt(static_cast<unsigned long>(m)))) + 8);
  for (; p <= policy.cap_bits; p *= 2) {
    BigInt lo_sum = 0;
    std::uint64_t inexact = 0;
    BigInt scaled, root;
    for (std::uint64_t i = 1; i <= m; ++i) {
      scaled = static_cast<unsigned long>(i);
      scaled <<= 3 * p;
      if (mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), 3) == 0) ++inexact;
      lo_sum += root;
    }
    RationalInterval sum(make_rational(lo_sum, pow2(p)),
                         make_rational(BigInt(lo_sum + static_cast<unsigned long>(inexact)), pow2(p)));
    if (auto f = sum.decided_floor()) return *f;
  }
  throw PrecisionExhausted("cbrt_floorsum_oracle: floor undecided for m = " + std::to_string(m));
}

// Median absolute deviation of {k^2 : 1 <= k <= n} (of {2 k^2} when scaled).
// Even-size medians are the mean of the two middle elements. Works on values
// multiplied by 4, which keeps every intermediate median integral.
inline BigRational mad_oracle(std::uint64_t n, bool scaled = false) {
  if (n < 1) throw std::invalid_argument("mad_oracle: n must be >= 1");
  if (n > 1'000'000'000ull) throw ResourceCap("mad_oracle: n = " + std::to_string(n));
  auto twice_median = [](std::vector<std::int64_t>& v) -> std::int64_t {
    const std::size_t size = v.size(), mid = size / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    const std::int64_t upper = v[mid];
    if (size % 2 == 1) return 2 * upper;
    const std::int64_t lower = *std::max_element(v.begin(), v.begin() + mid);
    return lower + upper;
  };
  std::vector<std::int64_t> values(n);
  for (std::uint64_t k = 1; k <= n; ++k) values[k - 1] = 2 * static_cast<std::int64_t>(k * k);
  // values hold 2 k^2, so twice_median gives 4 * median
  std::vector<std::int64_t> work = values;
  const std::int64_t median4 = twice_median(work);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::int64_t d = 2 * values[i] - median4;  // 4 * (k^2 - median)
    work[i] = d < 0 ? -d : d;
  }
  const std::int64_t mad8 = twice_median(work);
  return make_rational(BigInt(static_cast<long>(mad8)), BigInt(scaled ? 4 : 8));
}

struct MadResult {
  std::uint64_t n = 0;
  BigRational mad;
  RationalInterval lower;  // (n-1) sqrt(3n^2 + 10n + 3) / 8
  RationalInterval upper;  // (n+1)^2 sqrt(3) / 8
};

// Checks lower <= a_n <= upper for odd n, refining the square-root
// enclosures until both comparisons are decided.
inline MadResult mad_bracket_check(std::uint64_t n, unsigned precision_bits = 32,
                                   const PrecisionPolicy& policy = {}) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("mad_bracket_check: n must be odd and >= 3");
  const BigInt nn(static_cast<unsigned long>(n));
  MadResult result{n, mad_oracle(n), {}, {}};
  const BigRational lower_scale = make_rational(BigInt(nn - 1), BigInt(8));
  const BigRational upper_scale = make_rational(BigInt((nn + 1) * (nn + 1)), BigInt(8));
  const BigRational radicand(BigInt(3 * nn * nn + 10 * nn + 3));
  for (unsigned p = std::max(1u, precision_bits); p <= policy.cap_bits; p *= 2) {
    result.lower = root_enclosure(radicand, 2, p) * lower_scale;
    result.upper = real_enclosure(Sqrt3{}, p, policy) * upper_scale;
    if (result.lower.lo() > result.mad || result.upper.hi() < result.mad)
      throw BracketViolation("n = " + std::to_string(n) + ": mad " + to_string(result.mad) +
                             " outside [" + to_string(result.lower) + ", " + to_string(result.upper) + "]");
    if (result.lower.certainly_at_most(result.mad) && result.upper.certainly_at_least(result.mad))
      return result;
  }
  throw PrecisionExhausted("mad_bracket_check: undecided for n = " + std::to_string(n));
}

// Enclosure of a_n / n^2 - sqrt(3)/8.
inline RationalInterval mad_limit_gap(std::uint64_t n, unsigned precision_bits = 64,
                                      const PrecisionPolicy& policy = {}) {
  const BigInt nn(static_cast<unsigned long>(n));
  const BigRational ratio = mad_oracle(n) / BigRational(BigInt(nn * nn));
  return -(real_enclosure(Sqrt3{}, precision_bits, policy) * BigRational(1, 8)) + ratio;
}

}  // namespace seqproof
