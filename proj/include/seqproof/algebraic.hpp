#pragma once

// Cyclic self-convolution maximum, the real/imaginary parts of the Gaussian
// recurrence b_n = (n + b_{n-1})(1 + i), and two double-sum sequences with
// rational generating functions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqproof/core.hpp"

namespace seqproof {

// sum_{i=1}^{n} (n - i + 1)(1 + ((i + k) mod n)), with mod in [0, n-1].
inline BigInt cyclic_conv_value(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1 || k > n)
    throw KOutOfRange("cyclic_conv_value: need 1 <= k <= n, got n = " + std::to_string(n) +
                      ", k = " + std::to_string(k));
  __int128 total = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    total += static_cast<__int128>(n - i + 1) * static_cast<__int128>(1 + (i + k) % n);
  return from_int128(total);
}

// -(n/2) k^2 + (n^2/2 - n) k + n^3/6 + n^2 - n/6. Matches cyclic_conv_value
// for 1 <= k < n; at k = n the residue wraps, so evaluate at k mod n.
inline BigRational cyclic_conv_quadratic(std::uint64_t n_in, std::uint64_t k_in) {
  const BigRational n(BigInt(static_cast<unsigned long>(n_in))), k(BigInt(static_cast<unsigned long>(k_in)));
  BigRational out = -(n / 2) * k * k + (n * n / 2 - n) * k + n * n * n / 6 + n * n - n / 6;
  return out;
}

struct ConvProfile {
  std::uint64_t n = 0;
  std::vector<BigInt> values;  // values[k-1] = cyclic_conv_value(n, k)

  const BigInt& max() const { return *std::max_element(values.begin(), values.end()); }
};

inline ConvProfile cyclic_conv_profile(std::uint64_t n) {
  ConvProfile profile{n, {}};
  profile.values.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) profile.values.push_back(cyclic_conv_value(n, k));
  return profile;
}

// (7n^3 + 12n^2 + 8n) / 24 for even n, (7n^3 + 12n^2 + 5n) / 24 for odd n.
inline BigInt cyclic_conv_max_closed(std::uint64_t n_in) {
  if (n_in < 1) throw std::invalid_argument("cyclic_conv_max_closed: n must be >= 1");
  const BigInt n(static_cast<unsigned long>(n_in));
  BigInt numerator = 7 * n * n * n + 12 * n * n + (n_in % 2 == 0 ? 8 : 5) * n;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 24))
    throw NonIntegralResult("cyclic_conv_max_closed(" + std::to_string(n_in) + ")");
  return BigInt(numerator / 24);
}

// b_0 = 0, b_n = (n + b_{n-1})(1 + i), by direct iteration.
inline GaussianInt complex_seq_oracle(std::uint64_t n) {
  const GaussianInt one_plus_i{1, 1};
  GaussianInt b{0, 0};
  for (std::uint64_t j = 1; j <= n; ++j) b = (GaussianInt{BigInt(static_cast<unsigned long>(j)), 0} + b) * one_plus_i;
  return b;
}

namespace detail {

// 2^(n/2 + 1) sin(j pi / 4) for j with the same parity as n. The value is an
// integer: sin(j pi/4) is 0 or +-1 for even j and +-sqrt(2)/2 for odd j.
inline BigInt scaled_quarter_sine(std::uint64_t n, std::uint64_t j) {
  static constexpr std::array<int, 8> sign = {0, 1, 1, 1, 0, -1, -1, -1};
  const int s = sign[j % 8];
  if (s == 0) return 0;
  const BigInt magnitude = n % 2 == 0 ? pow2(n / 2 + 1) : pow2((n + 1) / 2);
  return s > 0 ? magnitude : BigInt(-magnitude);
}

}  // namespace detail

// Re(b_n) = 2^(n/2 + 1) sin(n pi / 4) - n, evaluated through the period-8
// residue table.
inline BigInt complex_re_closed(std::uint64_t n) {
  return BigInt(detail::scaled_quarter_sine(n, n) - static_cast<unsigned long>(n));
}

// Im(b_n) = (n + 2) - 2^(n/2 + 1) sin((n + 2) pi / 4).
inline BigInt complex_im_closed(std::uint64_t n) {
  return BigInt(static_cast<unsigned long>(n + 2) - detail::scaled_quarter_sine(n, n + 2));
}

// a_n = sum_{k=1}^{floor((n-1)/2)} (2k^2 + 2(n-k)^2 + k(n-k))
inline BigInt sum_a_direct(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sum_a_direct: n must be >= 1");
  BigInt total = 0;
  const BigInt nn(static_cast<unsigned long>(n));
  for (std::uint64_t k = 1; k <= (n - 1) / 2; ++k) {
    const BigInt kk(static_cast<unsigned long>(k));
    total += 2 * kk * kk + 2 * (nn - kk) * (nn - kk) + kk * (nn - kk);
  }
  return total;
}

// b_n = sum_{k=1}^{floor(n/3)} sum_{i=k}^{floor((n-k)/2)} i k (n - i - k)
inline BigInt sum_b_direct(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sum_b_direct: n must be >= 1");
  BigInt total = 0;
  for (std::uint64_t k = 1; k <= n / 3; ++k) {
    BigInt row = 0;
    for (std::uint64_t i = k; i <= (n - k) / 2; ++i)
      row += BigInt(static_cast<unsigned long>(i)) * static_cast<unsigned long>(n - i - k);
    total += row * static_cast<unsigned long>(k);
  }
  return total;
}

namespace detail {

inline BigInt eval_integral(const std::vector<BigRational>& coeffs_high_to_low, const BigInt& s,
                            const std::string& what) {
  BigRational acc = 0;
  for (const auto& c : coeffs_high_to_low) acc = acc * s + c;
  if (!is_integral(acc)) throw NonIntegralResult(what + " evaluated to " + to_string(acc));
  return acc.get_num();
}

}  // namespace detail

// Case polynomials in s: n = 2s (even) or n = 2s + 1 (odd).
inline BigInt sum_a_closed(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sum_a_closed: n must be >= 1");
  const BigInt s(static_cast<unsigned long>(n / 2));
  if (n % 2 == 0)
    return detail::eval_integral({6, BigRational(-13, 2), BigRational(1, 2), 0}, s, "sum_a_closed");
  return detail::eval_integral({6, 5, 1, 0}, s, "sum_a_closed");
}

// Case polynomials in s for n = 6s + r, r = 0..5.
inline BigInt sum_b_closed(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sum_b_closed: n must be >= 1");
  using Q = BigRational;
  static const std::array<std::vector<BigRational>, 6> cases = {{
      {Q(54, 5), Q(27, 4), Q(7, 6), Q(-3, 4), Q(1, 30), Q(0)},
      {Q(54, 5), Q(63, 4), Q(6), Q(5, 4), Q(1, 5), Q(0)},
      {Q(54, 5), Q(99, 4), Q(39, 2), Q(25, 4), Q(7, 10), Q(0)},
      {Q(54, 5), Q(135, 4), Q(125, 3), Q(103, 4), Q(241, 30), Q(1)},
      {Q(54, 5), Q(171, 4), Q(129, 2), Q(185, 4), Q(157, 10), Q(2)},
      {Q(54, 5), Q(207, 4), Q(96), Q(349, 4), Q(196, 5), Q(7)},
  }};
  const BigInt s(static_cast<unsigned long>(n / 6));
  return detail::eval_integral(cases[n % 6], s, "sum_b_closed");
}

enum class DoubleSum { A, B };

inline RationalGF double_sum_gf(DoubleSum which) {
  const IntPolynomial one_minus_x{1, -1};
  const IntPolynomial one_plus_x{1, 1};
  if (which == DoubleSum::A) {
    IntPolynomial numerator{0, 0, 0, 12, 11, 11, 2};
    return {numerator, poly_pow(one_minus_x, 4) * poly_pow(one_plus_x, 3)};
  }
  IntPolynomial numerator{0, 0, 0, 1, 3, 7, 15, 23, 21, 18, 14, 6};
  return {numerator, poly_pow(one_minus_x, 6) * poly_pow(one_plus_x, 3) * poly_pow(IntPolynomial{1, 1, 1}, 4)};
}

// Coefficients 0..n_max of A(x) or B(x); coefficient n is a_n (resp. b_n).
inline std::vector<BigInt> sum_gf_coeffs(DoubleSum which, std::size_t n_max) {
  return gf_coefficients(double_sum_gf(which), n_max);
}

}  // namespace seqproof
