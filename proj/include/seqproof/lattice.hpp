#pragma once

// Integer points in the l1 sphere / ball of radius n, capped coordinatewise
// by |x_i| <= k, in dimension m.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqproof/core.hpp"

namespace seqproof {

struct LatticeQuery {
  std::uint64_t n = 0;  // l1 radius
  std::uint64_t k = 0;  // l-infinity cap
  std::uint64_t m = 1;  // dimension
};

// (1 + 2 sum_{i=1}^{k} x^i)^m; coefficient n counts the points of the layer.
inline IntPolynomial layer_gf(std::uint64_t k, std::uint64_t m) {
  std::vector<BigInt> base(k + 1, BigInt(2));
  base[0] = 1;
  return poly_pow(IntPolynomial(std::move(base)), m);
}

// Counts points with max |x_i| <= k and sum |x_i| == n by walking the whole
// box {-k..k}^m.
inline BigInt layer_count_oracle(const LatticeQuery& q, std::uint64_t enumeration_cap = 10'000'000) {
  if (q.m < 1) throw std::invalid_argument("layer_count_oracle: m must be >= 1");
  const std::uint64_t side = 2 * q.k + 1;
  std::uint64_t box = 1;
  for (std::uint64_t i = 0; i < q.m; ++i) {
    if (box > enumeration_cap / side)
      throw ResourceCap("layer_count_oracle: (2k+1)^m exceeds " + std::to_string(enumeration_cap));
    box *= side;
  }
  const auto k = static_cast<std::int64_t>(q.k);
  std::vector<std::int64_t> x(q.m, -k);
  std::uint64_t count = 0;
  for (std::uint64_t visited = 0; visited < box; ++visited) {
    std::uint64_t l1 = 0;
    for (std::int64_t xi : x) l1 += static_cast<std::uint64_t>(xi < 0 ? -xi : xi);
    if (l1 == q.n) ++count;
    for (std::size_t i = 0; i < x.size(); ++i) {  // odometer step
      if (x[i] < k) {
        ++x[i];
        break;
      }
      x[i] = -k;
    }
  }
  return BigInt(static_cast<unsigned long>(count));
}

// a_{n,k}^{(3)} from the four-case piecewise cubic, each case divided by 3.
inline BigInt ball_count_closed3(std::uint64_t n_in, std::uint64_t k_in) {
  const BigInt n(static_cast<unsigned long>(n_in)), k(static_cast<unsigned long>(k_in));
  BigInt numerator;
  if (n < k) {
    numerator = 4 * n * n * n + 6 * n * n + 8 * n + 3;
  } else if (n < 2 * k) {
    numerator = 12 * k * k * k - 36 * k * k * n + 36 * k * n * n - 8 * n * n * n + 6 * n * n + 6 * k + 2 * n + 3;
  } else if (n < 3 * k) {
    numerator = -84 * k * k * k + 108 * k * k * n - 36 * k * n * n + 4 * n * n * n - 72 * k * k + 72 * n * k -
                12 * n * n - 6 * k + 8 * n + 3;
  } else {
    numerator = 24 * k * k * k + 36 * k * k + 18 * k + 3;
  }
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 3))
    throw NonIntegralResult("ball_count_closed3(" + std::to_string(n_in) + ", " + std::to_string(k_in) + ")");
  return BigInt(numerator / 3);
}

// a_{n,k}^{(m)} as a partial sum of layer_gf coefficients, i.e. the
// coefficient of x^n in B_k^(m)(x) / (1 - x).
inline BigInt ball_count_from_gf(const LatticeQuery& q) {
  const IntPolynomial layers = layer_gf(q.k, q.m);
  BigInt total = 0;
  const auto& c = layers.coefficients();
  for (std::size_t j = 0; j < c.size() && j <= q.n; ++j) total += c[j];
  return total;
}

}  // namespace seqproof
