#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "seqproof/core/bigint.hpp"
#include "seqproof/core/errors.hpp"
#include "seqproof/core/polynomial.hpp"

namespace seqproof {

// Rational generating function N(x)/D(x) with D(0) != 0.
class RationalGF {
 public:
  RationalGF(IntPolynomial numerator, IntPolynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.coefficient(0) == 0)
      throw ZeroConstantDenominator("denominator " + to_string(den_) + " vanishes at x = 0");
  }

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

// Power-series coefficients c_0..c_{n_max} of N/D, from the recurrence
// d_0 c_n = N_n - sum_{t>=1} d_t c_{n-t}. Every coefficient must be integral.
inline std::vector<BigInt> gf_coefficients(const RationalGF& gf, std::size_t n_max) {
  const auto& d = gf.denominator().coefficients();
  const BigInt& d0 = d.at(0);
  std::vector<BigInt> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigInt acc = gf.numerator().coefficient(n);
    const std::size_t tmax = std::min(n, d.size() - 1);
    for (std::size_t t = 1; t <= tmax; ++t) {
      if (d[t] != 0) acc -= d[t] * c[n - t];
    }
    if (d0 == 1) {
      c[n] = std::move(acc);
    } else if (d0 == -1) {
      c[n] = -acc;
    } else {
      if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
        throw NonIntegralCoefficient("coefficient " + std::to_string(n) + ": " + to_string(acc) +
                                     " not divisible by " + to_string(d0));
      mpz_divexact(c[n].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
    }
  }
  return c;
}

}  // namespace seqproof
